#ifndef ENDRANK_TABLE_IO_HPP
#define ENDRANK_TABLE_IO_HPP

#include <filesystem>
#include <iosfwd>

#include "endrank/semigroup.hpp"

namespace endrank {

// Cayley-table text format:
//   line 1:        N
//   lines 2..N+1:  N whitespace-separated 0-based indices (row a holds a*b)
//   line N+2:      optional, N whitespace-separated labels
// LF and CRLF line endings are both accepted. Blank trailing lines are
// ignored. Parse failures throw input_error naming the offending line.
SemigroupTable read_table(std::istream& in);
SemigroupTable read_table_file(std::filesystem::path const& path);

void write_table(std::ostream& out, SemigroupTable const& table);
void write_table_file(std::filesystem::path const& path,
                      SemigroupTable const&        table);

}  // namespace endrank

#endif  // ENDRANK_TABLE_IO_HPP
