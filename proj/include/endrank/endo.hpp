#ifndef ENDRANK_ENDO_HPP
#define ENDRANK_ENDO_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "endrank/brandt.hpp"
#include "endrank/element_set.hpp"
#include "endrank/permutation.hpp"
#include "endrank/semigroup.hpp"

namespace endrank {

struct Automorphism {
  Permutation sigma;
  friend bool operator==(Automorphism const&, Automorphism const&) = default;
};
struct ZeroConstant {
  friend bool operator==(ZeroConstant, ZeroConstant) = default;
};
struct NonzeroConstant {
  std::size_t i;  // the constant value is (i,i)
  friend bool operator==(NonzeroConstant, NonzeroConstant) = default;
};

using EndoKind = std::variant<Automorphism, ZeroConstant, NonzeroConstant>;

// A self-map of B_n, stored as the image of every element id under
// BrandtIndexing. Maps act on the right: image()[x] is x f.
class Endomorphism {
 public:
  std::size_t                    n() const noexcept { return n_; }
  std::vector<element_id> const& image() const noexcept { return image_; }
  EndoKind const&                kind() const noexcept { return kind_; }

  bool is_automorphism() const noexcept {
    return std::holds_alternative<Automorphism>(kind_);
  }
  bool is_zero_constant() const noexcept {
    return std::holds_alternative<ZeroConstant>(kind_);
  }
  bool is_nonzero_constant() const noexcept {
    return std::holds_alternative<NonzeroConstant>(kind_);
  }

  // "phi_id", "phi_(1,2)", "xi_(1,1)", "xi_theta"
  std::string label() const;

  // Canonical order: automorphisms by image array of sigma, then
  // xi_(1,1) .. xi_(n,n), then xi_theta.
  friend bool canonical_less(Endomorphism const& f, Endomorphism const& g);
  friend bool operator==(Endomorphism const& f, Endomorphism const& g) {
    return f.n_ == g.n_ && f.image_ == g.image_;
  }

 private:
  friend Endomorphism phi_of_perm(Permutation const&, std::size_t);
  friend Endomorphism constant_map(BrandtElement, std::size_t);
  friend Endomorphism compose(Endomorphism const&, Endomorphism const&);
  friend Endomorphism classify(std::size_t, std::vector<element_id>);

  Endomorphism(std::size_t n, std::vector<element_id> image, EndoKind kind)
      : n_(n), image_(std::move(image)), kind_(std::move(kind)) {}

  std::size_t             n_;
  std::vector<element_id> image_;
  EndoKind                kind_;
};

// (i,j) -> (i sigma, j sigma), theta -> theta.
// Throws input_error if sigma.degree() != n.
Endomorphism phi_of_perm(Permutation const& sigma, std::size_t n);

// xi_target. Throws input_error unless target is idempotent in B_n.
Endomorphism constant_map(BrandtElement target, std::size_t n);

// fg: apply f, then g. Throws input_error when the degrees differ.
Endomorphism compose(Endomorphism const& f, Endomorphism const& g);

// Checks the homomorphism law on every pair and tags the map. Throws
// input_error if the law fails or the image has the wrong length, and
// std::logic_error if a homomorphism falls outside
// Aut(B_n) + constants onto idempotents.
Endomorphism classify(std::size_t n, std::vector<element_id> image);

// End(B_n) in canonical order together with its composition table.
class EndoMonoid {
 public:
  std::size_t                      n() const noexcept { return n_; }
  std::vector<Endomorphism> const& elements() const noexcept {
    return elements_;
  }
  SemigroupTable const& table() const noexcept { return table_; }
  std::size_t           size() const noexcept { return elements_.size(); }

  // The ids of Aut(B_n): 0 .. n!-1.
  ElementSet  automorphisms() const;
  std::size_t automorphism_count() const noexcept { return aut_count_; }

  // Throws input_error if f is not in the monoid.
  element_id id_of(Endomorphism const& f) const;
  element_id id_of_phi(Permutation const& sigma) const;
  element_id id_of_xi(std::size_t i) const;  // xi_(i,i)
  element_id id_of_xi_theta() const noexcept {
    return static_cast<element_id>(elements_.size() - 1);
  }

 private:
  friend EndoMonoid enumerate_endomorphisms_structural(std::size_t,
                                                       std::size_t);
  EndoMonoid(std::size_t n, std::vector<Endomorphism> elements,
             SemigroupTable table, std::size_t aut_count)
      : n_(n),
        elements_(std::move(elements)),
        table_(std::move(table)),
        aut_count_(aut_count) {}

  std::size_t               n_;
  std::vector<Endomorphism> elements_;
  SemigroupTable            table_;
  std::size_t               aut_count_;
};

inline constexpr std::size_t default_factorial_budget = 6;
inline constexpr std::size_t oracle_max_n             = 3;

// All phi_sigma plus the n+1 constant maps; the composition table is built
// and validated. Throws input_error for n < 1, resource_error for
// n > max_n.
EndoMonoid enumerate_endomorphisms_structural(
    std::size_t n, std::size_t max_n = default_factorial_budget);

// Every homomorphism B_n -> B_n found by backtracking over the images of
// the elements with forced-image propagation; independent of the
// structural description. Sorted canonically. Throws resource_error for
// n > oracle_max_n.
std::vector<Endomorphism> enumerate_endomorphisms_oracle(std::size_t n);

// Distinguished subsets of End(B_n), n >= 2 (input_error otherwise):
//   {phi_(1 2), phi_(1 2 ... n), xi_(1,1), xi_theta}, which collapses to
//   three elements for n = 2 where the two permutations coincide;
ElementSet transposition_cycle_generators(EndoMonoid const& m);
//   {phi_(1 2), ..., phi_(n-1 n), xi_(1,1), xi_theta};
ElementSet adjacent_transposition_generators(EndoMonoid const& m);
//   {phi_id, xi_(1,1), ..., xi_(n,n), xi_theta}.
ElementSet identity_with_constants(EndoMonoid const& m);

}  // namespace endrank

#endif  // ENDRANK_ENDO_HPP
