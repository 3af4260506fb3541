#include "endrank/brandt.hpp"

#include <string>
#include <vector>

#include "endrank/errors.hpp"

namespace endrank {

std::string BrandtElement::label() const {
  if (is_zero()) {
    return "theta";
  }
  return "(" + std::to_string(row_) + "," + std::to_string(col_) + ")";
}

BrandtIndexing::BrandtIndexing(std::size_t n) : n_(n) {
  if (n < 1) {
    throw input_error("Brandt semigroup B_n needs n >= 1");
  }
}

namespace {

void check_element(BrandtElement e, std::size_t n) {
  if (!e.is_zero()
      && (e.row() < 1 || e.row() > n || e.col() < 1 || e.col() > n)) {
    throw input_error(e.label() + " is not an element of B_"
                      + std::to_string(n));
  }
}

}  // namespace

element_id BrandtIndexing::id_of(BrandtElement e) const {
  check_element(e, n_);
  if (e.is_zero()) {
    return 0;
  }
  return static_cast<element_id>(1 + (e.row() - 1) * n_ + (e.col() - 1));
}

BrandtElement BrandtIndexing::element_of(element_id id) const {
  if (id >= size()) {
    throw input_error("id " + std::to_string(id) + " is not in B_"
                      + std::to_string(n_));
  }
  if (id == 0) {
    return BrandtElement::zero();
  }
  return BrandtElement::pair((id - 1) / n_ + 1, (id - 1) % n_ + 1);
}

BrandtElement brandt_add(BrandtElement a, BrandtElement b, std::size_t n) {
  check_element(a, n);
  check_element(b, n);
  if (a.is_zero() || b.is_zero() || a.col() != b.row()) {
    return BrandtElement::zero();
  }
  return BrandtElement::pair(a.row(), b.col());
}

SemigroupTable build_brandt(std::size_t n) {
  BrandtIndexing const idx(n);
  auto const           size = idx.size();
  std::vector<element_id>  products;
  std::vector<std::string> labels;
  products.reserve(size * size);
  for (element_id a = 0; a < size; ++a) {
    auto const ea = idx.element_of(a);
    for (element_id b = 0; b < size; ++b) {
      products.push_back(idx.id_of(brandt_add(ea, idx.element_of(b), n)));
    }
    labels.push_back(ea.label());
  }
  return SemigroupTable(size, std::move(products), std::move(labels));
}

}  // namespace endrank
