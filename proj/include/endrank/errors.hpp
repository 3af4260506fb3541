#ifndef ENDRANK_ERRORS_HPP
#define ENDRANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace endrank {

// Malformed arguments: out-of-range ids, bad n, non-bijective permutations,
// unparsable table files.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request exceeds a configured size budget (factorial budget, oracle
// regime, exhaustive regime).
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace endrank

#endif  // ENDRANK_ERRORS_HPP
