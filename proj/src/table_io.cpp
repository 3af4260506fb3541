#include "endrank/table_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "endrank/errors.hpp"

namespace endrank {

namespace {

std::vector<std::string> split_ws(std::string const& line) {
  std::vector<std::string> out;
  std::istringstream       in(line);
  std::string              tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

std::size_t parse_index(std::string const& tok, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw input_error("line " + std::to_string(line_no) + ": '" + tok
                      + "' is not a non-negative integer");
  }
  return value;
}

}  // namespace

SemigroupTable read_table(std::istream& in) {
  std::vector<std::string> lines;
  std::string              line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    lines.push_back(line);
  }
  while (!lines.empty() && split_ws(lines.back()).empty()) {
    lines.pop_back();
  }
  if (lines.empty()) {
    throw input_error("empty table file");
  }
  auto header = split_ws(lines[0]);
  if (header.size() != 1) {
    throw input_error("line 1: expected the table size N");
  }
  auto const n = parse_index(header[0], 1);
  if (n == 0) {
    throw input_error("line 1: table size must be at least 1");
  }
  if (lines.size() < n + 1) {
    throw input_error("expected " + std::to_string(n) + " rows, found "
                      + std::to_string(lines.size() - 1));
  }
  if (lines.size() > n + 2) {
    throw input_error("line " + std::to_string(n + 3)
                      + ": unexpected content after the label line");
  }
  std::vector<element_id> products;
  products.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    auto const line_no = r + 2;
    auto       toks    = split_ws(lines[r + 1]);
    if (toks.size() != n) {
      throw input_error("line " + std::to_string(line_no) + ": expected "
                        + std::to_string(n) + " entries, found "
                        + std::to_string(toks.size()));
    }
    for (auto const& tok : toks) {
      auto v = parse_index(tok, line_no);
      if (v >= n) {
        throw input_error("line " + std::to_string(line_no) + ": entry "
                          + tok + " is not below " + std::to_string(n));
      }
      products.push_back(static_cast<element_id>(v));
    }
  }
  std::vector<std::string> labels;
  if (lines.size() == n + 2) {
    labels = split_ws(lines[n + 1]);
    if (labels.size() != n) {
      throw input_error("line " + std::to_string(n + 2) + ": expected "
                        + std::to_string(n) + " labels, found "
                        + std::to_string(labels.size()));
    }
  }
  return SemigroupTable(n, std::move(products), std::move(labels));
}

SemigroupTable read_table_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    throw input_error("cannot open " + path.string());
  }
  return read_table(in);
}

void write_table(std::ostream& out, SemigroupTable const& t) {
  auto const n = t.size();
  out << n << '\n';
  for (element_id a = 0; a < n; ++a) {
    auto const row = t.row(a);
    for (std::size_t b = 0; b < n; ++b) {
      out << (b ? " " : "") << row[b];
    }
    out << '\n';
  }
  if (t.has_labels()) {
    for (element_id a = 0; a < n; ++a) {
      out << (a ? " " : "") << t.label(a);
    }
    out << '\n';
  }
}

void write_table_file(std::filesystem::path const& path,
                      SemigroupTable const&        t) {
  std::ofstream out(path);
  if (!out) {
    throw input_error("cannot write " + path.string());
  }
  write_table(out, t);
}

}  // namespace endrank
