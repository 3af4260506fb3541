#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "endrank/endo.hpp"
#include "endrank/errors.hpp"
#include "oracle.hpp"

using namespace endrank;

namespace {

enum class Kind { aut, zero, nonzero };

Kind kind_of(Endomorphism const& f) {
  if (f.is_automorphism()) return Kind::aut;
  return f.is_zero_constant() ? Kind::zero : Kind::nonzero;
}

// Every self-map of B_n checked against the homomorphism law, with no
// pruning. Feasible for n <= 2 (5^5 maps).
std::set<std::vector<element_id>> brute_force_homomorphisms(std::size_t n) {
  auto const t    = build_brandt(n);
  auto const size = t.size();
  std::set<std::vector<element_id>> out;
  std::vector<element_id>           f(size, 0);
  for (;;) {
    bool ok = true;
    for (element_id x = 0; x < size && ok; ++x)
      for (element_id y = 0; y < size && ok; ++y)
        ok = f[t(x, y)] == t(f[x], f[y]);
    if (ok) out.insert(f);
    std::size_t k = 0;
    while (k < size && ++f[k] == size) f[k++] = 0;
    if (k == size) return out;
  }
}

}  // namespace

TEST_CASE("Permutation") {
  CHECK_THROWS_AS(Permutation({1, 1}), input_error);
  CHECK_THROWS_AS(Permutation({0, 1}), input_error);
  CHECK_THROWS_AS(Permutation({1, 3}), input_error);

  auto const c = Permutation::long_cycle(3);
  CHECK(c.image() == std::vector<std::size_t>{2, 3, 1});
  CHECK(c.cycle_string() == "(1,2,3)");
  CHECK(Permutation::identity(3).cycle_string() == "id");
  CHECK(Permutation({2, 1, 4, 3}).cycle_string() == "(1,2)(3,4)");

  // right action: (1 2) then (2 3) sends 1 -> 2 -> 3
  auto const st = Permutation::transposition(3, 1, 2)
                      .then(Permutation::transposition(3, 2, 3));
  CHECK(st.apply(1) == 3);
  CHECK(st.apply(3) == 2);

  auto const all = Permutation::all(4);
  CHECK(all.size() == 24);
  CHECK(all.front().is_identity());
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("phi_of_perm") {
  BrandtIndexing const i2(2);
  auto const f = phi_of_perm(Permutation::transposition(2, 1, 2), 2);
  CHECK(f.image()[i2.id_of(BrandtElement::pair(1, 2))]
        == i2.id_of(BrandtElement::pair(2, 1)));
  CHECK(f.image()[0] == 0);
  CHECK(f.is_automorphism());

  auto const id = phi_of_perm(Permutation::identity(3), 3);
  for (element_id x = 0; x < 10; ++x) CHECK(id.image()[x] == x);

  BrandtIndexing const i3(3);
  auto const g = phi_of_perm(Permutation::long_cycle(3), 3);
  CHECK(g.image()[i3.id_of(BrandtElement::pair(1, 1))]
        == i3.id_of(BrandtElement::pair(2, 2)));

  CHECK_THROWS_AS(phi_of_perm(Permutation::identity(2), 3), input_error);
}

TEST_CASE("constant_map") {
  auto const z = constant_map(BrandtElement::zero(), 2);
  CHECK(z.is_zero_constant());
  CHECK(z.label() == "xi_theta");
  CHECK_NOTHROW(classify(2, z.image()));

  auto const c = constant_map(BrandtElement::pair(1, 1), 3);
  CHECK(std::get<NonzeroConstant>(c.kind()).i == 1);
  CHECK(c.label() == "xi_(1,1)");

  // f((1,2)+(2,1)) = (1,2) but f(1,2)+f(2,1) = (1,2)+(1,2) = theta
  CHECK_THROWS_AS(constant_map(BrandtElement::pair(1, 2), 2), input_error);
  CHECK_THROWS_AS(classify(2, std::vector<element_id>(5, 2)), input_error);
}

TEST_CASE("compose acts on the right") {
  auto const xi11 = constant_map(BrandtElement::pair(1, 1), 3);
  for (auto const& sigma : Permutation::all(3)) {
    auto const i = sigma.apply(1);
    CHECK(compose(xi11, phi_of_perm(sigma, 3))
          == constant_map(BrandtElement::pair(i, i), 3));
  }
  auto const s = Permutation::transposition(3, 1, 2);
  auto const r = Permutation::long_cycle(3);
  CHECK(compose(phi_of_perm(s, 3), phi_of_perm(r, 3))
        == phi_of_perm(s.then(r), 3));
  auto const zero = constant_map(BrandtElement::zero(), 3);
  auto const m3 = enumerate_endomorphisms_structural(3);
  for (auto const& f : m3.elements()) {
    CHECK(compose(f, zero) == zero);
  }
  CHECK_THROWS_AS(compose(zero, constant_map(BrandtElement::zero(), 2)),
                  input_error);
}

TEST_CASE("classify") {
  auto const swap = phi_of_perm(Permutation::transposition(2, 1, 2), 2);
  CHECK(classify(2, swap.image()).is_automorphism());
  CHECK(classify(2, std::vector<element_id>(5, 0)).is_zero_constant());
  auto const xi22 = classify(2, std::vector<element_id>(5, 4));
  CHECK(std::get<NonzeroConstant>(xi22.kind()).i == 2);
  CHECK_THROWS_AS(classify(2, {0, 1, 2, 3}), input_error);
  CHECK_THROWS_AS(classify(2, {0, 1, 2, 3, 5}), input_error);
  CHECK_THROWS_AS(classify(2, {0, 1, 1, 3, 4}), input_error);
}

TEST_CASE("structural enumeration") {
  CHECK(enumerate_endomorphisms_structural(1).size() == 3);
  CHECK(enumerate_endomorphisms_structural(2).size() == 5);
  CHECK(enumerate_endomorphisms_structural(3).size() == 10);
  CHECK(enumerate_endomorphisms_structural(4).size() == 29);
  CHECK_THROWS_AS(enumerate_endomorphisms_structural(0), input_error);
  CHECK_THROWS_AS(enumerate_endomorphisms_structural(7), resource_error);
  CHECK_THROWS_AS(enumerate_endomorphisms_structural(4, 3), resource_error);

  auto const m = enumerate_endomorphisms_structural(3);
  std::vector<std::string> labels;
  for (auto const& f : m.elements()) labels.push_back(f.label());
  CHECK(labels == std::vector<std::string>{
                      "phi_id", "phi_(2,3)", "phi_(1,2)", "phi_(1,2,3)",
                      "phi_(1,3,2)", "phi_(1,3)", "xi_(1,1)", "xi_(2,2)",
                      "xi_(3,3)", "xi_theta"});
  CHECK(std::is_sorted(m.elements().begin(), m.elements().end(),
                       [](auto const& f, auto const& g) {
                         return canonical_less(f, g);
                       }));
  CHECK(m.automorphisms().count() == 6);
}

TEST_CASE("backtracking oracle matches brute force and the structural list") {
  for (std::size_t n : {1, 2}) {
    auto const brute = brute_force_homomorphisms(n);
    auto const found = enumerate_endomorphisms_oracle(n);
    std::set<std::vector<element_id>> images;
    for (auto const& f : found) images.insert(f.image());
    CHECK(images == brute);
  }
  CHECK(brute_force_homomorphisms(1).size() == 3);
  CHECK(brute_force_homomorphisms(2).size() == 5);
  for (std::size_t n : {1, 2, 3}) {
    CAPTURE(n);
    auto const found = enumerate_endomorphisms_oracle(n);
    CHECK(found == enumerate_endomorphisms_structural(n).elements());
  }
  CHECK(enumerate_endomorphisms_oracle(3).size() == 10);
  CHECK_THROWS_AS(enumerate_endomorphisms_oracle(4), resource_error);
}

TEST_CASE("sigma -> phi_sigma is an injective homomorphism (n <= 4)") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const perms = Permutation::all(n);
    std::set<std::vector<element_id>> images;
    for (auto const& s : perms) {
      images.insert(phi_of_perm(s, n).image());
      for (auto const& r : perms) {
        CHECK(compose(phi_of_perm(s, n), phi_of_perm(r, n))
              == phi_of_perm(s.then(r), n));
      }
    }
    CHECK(images.size() == perms.size());
  }
}

TEST_CASE("factorisation properties of End(B_n)") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CAPTURE(n);
    auto const  m  = enumerate_endomorphisms_structural(n);
    auto const& t  = m.table();
    auto const& el = m.elements();
    auto const  N  = m.size();
    for (element_id a = 0; a < N; ++a) {
      for (element_id b = 0; b < N; ++b) {
        auto const p = kind_of(el[t(a, b)]);
        auto const ka = kind_of(el[a]), kb = kind_of(el[b]);
        // automorphism iff both factors are
        CHECK((p == Kind::aut) == (ka == Kind::aut && kb == Kind::aut));
        // xi_theta only from a factor xi_theta
        if (p == Kind::zero) CHECK((ka == Kind::zero || kb == Kind::zero));
        // nonzero constant iff a factor is one and the product is not zero
        bool const some = ka == Kind::nonzero || kb == Kind::nonzero;
        CHECK((p == Kind::nonzero) == (some && p != Kind::zero));
        for (element_id c = 0; c < N; ++c) {
          auto const q  = kind_of(el[t(t(a, b), c)]);
          auto const kc = kind_of(el[c]);
          if (q == Kind::zero)
            CHECK((ka == Kind::zero || kb == Kind::zero || kc == Kind::zero));
          CHECK((q == Kind::aut)
                == (ka == Kind::aut && kb == Kind::aut && kc == Kind::aut));
          bool const any = some || kc == Kind::nonzero;
          CHECK((q == Kind::nonzero) == (any && q != Kind::zero));
        }
      }
    }
  }
}

TEST_CASE("factorisation properties on random longer products") {
  std::mt19937 rng(2024);
  for (std::size_t n : {3, 4, 5}) {
    auto const  m  = enumerate_endomorphisms_structural(n);
    auto const& el = m.elements();
    std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
      std::size_t const k = 3 + trial % 3;
      std::vector<Kind> kinds;
      auto              f = el[pick(rng)];
      kinds.push_back(kind_of(f));
      for (std::size_t j = 1; j < k; ++j) {
        auto const& g = el[pick(rng)];
        kinds.push_back(kind_of(g));
        f = compose(f, g);
      }
      auto has = [&](Kind w) {
        return std::find(kinds.begin(), kinds.end(), w) != kinds.end();
      };
      auto const p = kind_of(f);
      CHECK((p == Kind::aut) == !(has(Kind::zero) || has(Kind::nonzero)));
      if (p == Kind::zero) CHECK(has(Kind::zero));
      CHECK((p == Kind::nonzero) == (has(Kind::nonzero) && p != Kind::zero));
    }
  }
}

TEST_CASE("every generating set contains xi_theta and a nonzero constant") {
  for (std::size_t n : {1, 2, 3}) {
    auto const  m     = enumerate_endomorphisms_structural(n);
    auto const& t     = m.table();
    auto const  total = oracle::mask_t{1} << m.size();
    for (oracle::mask_t u = 1; u < total; ++u) {
      auto const s = oracle::to_set(u, m.size());
      if (!is_generating(s, t)) continue;
      CHECK(s.contains(m.id_of_xi_theta()));
      bool nonzero = false;
      for (std::size_t i = 1; i <= n; ++i) nonzero |= s.contains(m.id_of_xi(i));
      CHECK(nonzero);
    }
  }
}

TEST_CASE("identity row and xi_theta column") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const  m  = enumerate_endomorphisms_structural(n);
    auto const& t  = m.table();
    auto const  id = m.id_of_phi(Permutation::identity(n));
    CHECK(id == 0);
    for (element_id x = 0; x < m.size(); ++x) {
      CHECK(t(id, x) == x);
      CHECK(t(x, id) == x);
      CHECK(t(x, m.id_of_xi_theta()) == m.id_of_xi_theta());
    }
  }
}

TEST_CASE("distinguished subsets") {
  auto const m3 = enumerate_endomorphisms_structural(3);
  CHECK(m3.table().labels_of(transposition_cycle_generators(m3))
        == std::vector<std::string>{"phi_(1,2)", "phi_(1,2,3)", "xi_(1,1)",
                                    "xi_theta"});
  CHECK(m3.table().labels_of(adjacent_transposition_generators(m3))
        == std::vector<std::string>{"phi_(2,3)", "phi_(1,2)", "xi_(1,1)",
                                    "xi_theta"});
  CHECK(identity_with_constants(m3).count() == 5);
  auto const m2 = enumerate_endomorphisms_structural(2);
  CHECK(transposition_cycle_generators(m2).count() == 3);
  CHECK_THROWS_AS(identity_with_constants(enumerate_endomorphisms_structural(1)),
                  input_error);
  CHECK_THROWS_AS(m3.id_of_xi(4), input_error);
}
