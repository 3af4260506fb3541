#include "endrank/element_set.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "endrank/errors.hpp"

namespace endrank {

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet ElementSet::of(std::size_t universe,
                          std::span<element_id const> ids) {
  ElementSet s(universe);
  for (auto x : ids) {
    if (x >= universe) {
      throw input_error("element id " + std::to_string(x)
                        + " out of range for a table of size "
                        + std::to_string(universe));
    }
    s.insert(x);
  }
  return s;
}

ElementSet ElementSet::of(std::size_t                       universe,
                          std::initializer_list<element_id> ids) {
  return of(universe, std::span<element_id const>(ids.begin(), ids.size()));
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  if (auto rem = universe % 64; rem != 0) {
    s.words_.back() = (std::uint64_t{1} << rem) - 1;
  }
  return s;
}

std::size_t ElementSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) {
    c += std::popcount(w);
  }
  return c;
}

bool ElementSet::empty() const noexcept {
  return std::all_of(
      words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool ElementSet::is_subset_of(ElementSet const& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) {
      return false;
    }
  }
  return true;
}

bool ElementSet::intersects(ElementSet const& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) {
      return true;
    }
  }
  return false;
}

void ElementSet::append_members(std::vector<element_id>& out) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<element_id>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
}

std::vector<element_id> ElementSet::members() const {
  std::vector<element_id> out;
  out.reserve(count());
  append_members(out);
  return out;
}

ElementSet& ElementSet::operator|=(ElementSet const& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] |= other.words_[i];
  }
  return *this;
}

bool lex_less(ElementSet const& a, ElementSet const& b) {
  auto x = a.members();
  auto y = b.members();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace endrank
