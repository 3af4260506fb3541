#ifndef ENDRANK_BRANDT_HPP
#define ENDRANK_BRANDT_HPP

#include <cstddef>
#include <string>

#include "endrank/element_set.hpp"
#include "endrank/semigroup.hpp"

namespace endrank {

// An element of the Brandt semigroup B_n: either the zero (theta) or a pair
// (i, j) with 1-based coordinates.
class BrandtElement {
 public:
  static constexpr BrandtElement zero() noexcept { return {}; }
  static constexpr BrandtElement pair(std::size_t i, std::size_t j) noexcept {
    return BrandtElement{i, j};
  }

  constexpr bool        is_zero() const noexcept { return zero_; }
  constexpr std::size_t row() const noexcept { return row_; }
  constexpr std::size_t col() const noexcept { return col_; }

  // "theta" or "(i,j)"
  std::string label() const;

  friend constexpr bool operator==(BrandtElement,
                                   BrandtElement) noexcept = default;

 private:
  constexpr BrandtElement() noexcept = default;
  constexpr BrandtElement(std::size_t i, std::size_t j) noexcept
      : zero_(false), row_(i), col_(j) {}

  bool        zero_ = true;
  std::size_t row_  = 0;
  std::size_t col_ = 0;
};

// Fixed element order for B_n: id 0 is theta, (i,j) is 1 + (i-1)n + (j-1).
class BrandtIndexing {
 public:
  // Throws input_error for n < 1.
  explicit BrandtIndexing(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return n_ * n_ + 1; }

  // Throws input_error if e is not an element of B_n / id out of range.
  element_id    id_of(BrandtElement e) const;
  BrandtElement element_of(element_id id) const;

 private:
  std::size_t n_;
};

// (i,j) + (k,l) = (i,l) if j == k, theta otherwise; theta absorbs.
// Throws input_error if a coordinate lies outside [1, n].
BrandtElement brandt_add(BrandtElement a, BrandtElement b, std::size_t n);

// B_n as a labelled table of size n^2 + 1 under BrandtIndexing.
SemigroupTable build_brandt(std::size_t n);

}  // namespace endrank

#endif  // ENDRANK_BRANDT_HPP
