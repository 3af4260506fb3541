#ifndef ENDRANK_SRC_SEARCH_HPP
#define ENDRANK_SRC_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <optional>

#include "endrank/ranks.hpp"
#include "endrank/semigroup.hpp"

namespace endrank::detail {

// Node and wall-clock accounting for one search. Once exhausted it stays
// exhausted.
class SearchClock {
 public:
  explicit SearchClock(Budget const& budget);

  // Counts one node; false once the budget is spent.
  bool tick();
  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  using clock = std::chrono::steady_clock;

  std::optional<clock::time_point> deadline_;
  std::optional<std::uint64_t>     max_nodes_;
  std::uint64_t                    nodes_     = 0;
  bool                             exhausted_ = false;
};

struct IndependentSearchOptions {
  // Only independent sets that also generate the whole table count.
  bool require_generating = false;
  // Sets of this size or smaller are not interesting (a witness of this
  // size is already known).
  std::size_t beat = 0;
  // Stop as soon as a set of this size is found.
  std::optional<std::size_t> stop_at;
};

struct SearchResult {
  std::optional<ElementSet> best;
  bool                      complete = true;
  std::uint64_t             nodes    = 0;
};

// Depth-first search of the set-enumeration tree of independent subsets
// (children add a larger id). Dependent extensions are cut immediately and
// never retried deeper, since supersets of dependent sets are dependent.
// Returns the lexicographically smallest largest qualifying set.
SearchResult max_independent_search(SemigroupTable const&           table,
                                    SearchClock&                    clock,
                                    IndependentSearchOptions const& options);

// Size of a smallest dependent subset, nullopt if every subset is
// independent. `complete` in the result says whether the budget held.
struct DependentSizeResult {
  std::optional<std::size_t> size;
  bool                       complete = true;
};
DependentSizeResult min_dependent_size(SemigroupTable const& table,
                                       SearchClock&          clock);

// Size-ascending search for a generating set; best is the
// lexicographically smallest one of least size. When incomplete, `bound`
// is the first size not fully examined.
struct GeneratingSearchResult {
  std::optional<ElementSet> best;
  bool                      complete = true;
  std::size_t               bound    = 0;
};
GeneratingSearchResult min_generating_search(SemigroupTable const& table,
                                             SearchClock&          clock);

}  // namespace endrank::detail

#endif  // ENDRANK_SRC_SEARCH_HPP
