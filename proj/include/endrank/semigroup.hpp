#ifndef ENDRANK_SEMIGROUP_HPP
#define ENDRANK_SEMIGROUP_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "endrank/element_set.hpp"

namespace endrank {

// A finite magma given by its Cayley table. Construction checks closure
// (every entry < N); associativity is checked separately by validate().
class SemigroupTable {
 public:
  // products is row-major: products[a * N + b] = a * b.
  SemigroupTable(std::size_t size, std::vector<element_id> products,
                 std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return size_; }

  element_id operator()(element_id a, element_id b) const noexcept {
    return products_[a * size_ + b];
  }
  std::span<element_id const> row(element_id a) const noexcept {
    return {products_.data() + a * size_, size_};
  }
  std::vector<element_id> const& products() const noexcept {
    return products_;
  }

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::vector<std::string> const& labels() const noexcept { return labels_; }
  // The stored label, or the decimal index when the table is unlabelled.
  std::string label(element_id a) const;
  std::vector<std::string> labels_of(ElementSet const& s) const;

  friend bool operator==(SemigroupTable const&,
                         SemigroupTable const&) = default;

 private:
  std::size_t              size_;
  std::vector<element_id>  products_;
  std::vector<std::string> labels_;
};

struct ValidationReport {
  // First triple (a, b, c) in lexicographic order with (ab)c != a(bc).
  std::optional<std::array<element_id, 3>> violation;

  bool ok() const noexcept { return !violation.has_value(); }
};

ValidationReport validate(SemigroupTable const& table);

// <gens>, the least subset containing gens closed under the product.
// <{}> is {}. Throws input_error if gens is over a different universe.
ElementSet closure(ElementSet const& gens, SemigroupTable const& table);

// Grows `closed`, which must already be closed under the product, to
// <closed + extra>. Only products involving new elements are computed.
// `scratch` is reused storage for the member list.
void extend_closure(SemigroupTable const& table, ElementSet& closed,
                    std::span<element_id const> extra,
                    std::vector<element_id>& scratch);

bool is_generating(ElementSet const& u, SemigroupTable const& table);
bool is_independent(ElementSet const& u, SemigroupTable const& table);
bool is_band(SemigroupTable const& table);
ElementSet idempotents(SemigroupTable const& table);

// A nonempty U is prime when ab in U implies a in U or b in U.
// Throws input_error for empty U.
bool is_prime_subset(ElementSet const& u, SemigroupTable const& table);

// The restriction of the table to a closed subset, reindexed in ascending
// order of the original ids. Throws input_error if `elements` is empty or
// not closed.
SemigroupTable subtable(SemigroupTable const& table,
                        ElementSet const&     elements);

}  // namespace endrank

#endif  // ENDRANK_SEMIGROUP_HPP
