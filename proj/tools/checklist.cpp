#include <cstdint>
#include <functional>
#include <string>

#include "cli.hpp"
#include "endrank/endo.hpp"
#include "endrank/errors.hpp"

namespace endrank::cli {

namespace {

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    f *= k;
  }
  return f;
}

struct Outcome {
  CheckStatus status;
  std::string detail;
};

Outcome pass(std::string detail = {}) {
  return {CheckStatus::pass, std::move(detail)};
}
Outcome fail(std::string detail) {
  return {CheckStatus::fail, std::move(detail)};
}
Outcome skip(std::string detail) {
  return {CheckStatus::skipped, std::move(detail)};
}
Outcome expect(bool ok, std::string detail) {
  return {ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

Check run_check(std::string name, std::function<Outcome()> const& body) {
  try {
    auto o = body();
    return {std::move(name), o.status, std::move(o.detail)};
  } catch (resource_error const& e) {
    return {std::move(name), CheckStatus::skipped, e.what()};
  } catch (std::exception const& e) {
    return {std::move(name), CheckStatus::fail, e.what()};
  }
}

// r with a value that must equal `want`; budget exhaustion is a skip.
Outcome rank_equals(RankValue const& r, std::size_t want) {
  if (!r.exact) {
    return skip("budget exhausted at " + std::to_string(r.value));
  }
  return expect(r.value == want, "got " + std::to_string(r.value)
                                     + ", expected " + std::to_string(want));
}

enum class Kind { aut, zero, nonzero };

Kind kind_of(Endomorphism const& f) {
  return f.is_automorphism() ? Kind::aut
                             : (f.is_zero_constant() ? Kind::zero
                                                     : Kind::nonzero);
}

}  // namespace

std::vector<Check> claim_checklist(std::size_t n, Budget const& budget) {
  std::vector<Check> checks;
  auto const         monoid = enumerate_endomorphisms_structural(n);
  auto const&        t      = monoid.table();
  auto const         size   = monoid.size();
  auto const&        el     = monoid.elements();

  checks.push_back(run_check(
      "End(B_n) = Aut(B_n) + C_I(B_n): backtracking enumeration matches",
      [&] {
        if (n > oracle_max_n) {
          return skip("oracle enumeration limited to n <= 3");
        }
        auto const found = enumerate_endomorphisms_oracle(n);
        return expect(found == el,
                      std::to_string(found.size()) + " homomorphisms found");
      }));

  checks.push_back(run_check("|End(B_n)| = n! + n + 1", [&] {
    return expect(size == factorial(n) + n + 1, std::to_string(size));
  }));

  checks.push_back(run_check("sigma -> phi_sigma is an injective homomorphism",
                             [&] {
    auto const perms = Permutation::all(n);
    for (auto const& s : perms) {
      for (auto const& r : perms) {
        if (compose(phi_of_perm(s, n), phi_of_perm(r, n))
            != phi_of_perm(s.then(r), n)) {
          return fail("phi_" + s.cycle_string() + " phi_" + r.cycle_string());
        }
      }
    }
    return expect(monoid.automorphism_count() == perms.size(),
                  std::to_string(perms.size()) + " distinct automorphisms");
  }));

  // Products of up to `depth` factors, checked through the table.
  std::size_t const depth = size <= 30 ? 3 : 2;
  auto for_products = [&](auto&& visit) {
    for (element_id a = 0; a < size; ++a) {
      for (element_id b = 0; b < size; ++b) {
        if (!visit(std::vector<element_id>{a, b}, t(a, b))) {
          return false;
        }
        if (depth < 3) {
          continue;
        }
        for (element_id c = 0; c < size; ++c) {
          if (!visit(std::vector<element_id>{a, b, c}, t(t(a, b), c))) {
            return false;
          }
        }
      }
    }
    return true;
  };
  auto const depth_note
      = "all products of 2" + std::string(depth == 3 ? " and 3" : "")
        + " factors";

  checks.push_back(run_check(
      "product is an automorphism iff every factor is", [&] {
        return expect(for_products([&](auto const& fs, element_id p) {
          bool all_aut = true;
          for (auto f : fs) {
            all_aut = all_aut && kind_of(el[f]) == Kind::aut;
          }
          return all_aut == (kind_of(el[p]) == Kind::aut);
        }), depth_note);
      }));

  checks.push_back(run_check(
      "product equal to xi_theta has a factor xi_theta", [&] {
        return expect(for_products([&](auto const& fs, element_id p) {
          if (kind_of(el[p]) != Kind::zero) {
            return true;
          }
          for (auto f : fs) {
            if (kind_of(el[f]) == Kind::zero) {
              return true;
            }
          }
          return false;
        }), depth_note);
      }));

  checks.push_back(run_check(
      "product is a nonzero constant iff some factor is (and it is not "
      "xi_theta)",
      [&] {
        return expect(for_products([&](auto const& fs, element_id p) {
          bool some_nonzero = false;
          for (auto f : fs) {
            some_nonzero = some_nonzero || kind_of(el[f]) == Kind::nonzero;
          }
          bool const is_nonzero = kind_of(el[p]) == Kind::nonzero;
          return is_nonzero == (some_nonzero && kind_of(el[p]) != Kind::zero);
        }), depth_note);
      }));

  checks.push_back(run_check(
      "every generating set contains xi_theta and a nonzero constant", [&] {
        if (size > 20) {
          return skip("exhaustive over 2^" + std::to_string(size)
                      + " subsets is out of budget");
        }
        ElementSet nonzero(size);
        for (std::size_t i = 1; i <= n; ++i) {
          nonzero.insert(monoid.id_of_xi(i));
        }
        std::size_t generating = 0;
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << size);
             ++mask) {
          ElementSet u(size);
          for (element_id x = 0; x < size; ++x) {
            if (mask >> x & 1U) {
              u.insert(x);
            }
          }
          if (!is_generating(u, t)) {
            continue;
          }
          ++generating;
          if (!u.contains(monoid.id_of_xi_theta()) || !u.intersects(nonzero)) {
            return fail("generating set " + std::to_string(mask)
                        + " lacks a constant");
          }
        }
        return pass(std::to_string(generating) + " generating sets");
      }));

  if (n == 1) {
    checks.push_back(run_check("r_i(End(B_1)) = 3 for i = 1..5", [&] {
      auto const report = rank_report(t, budget, all_ranks, n);
      for (auto const& r : report.ranks) {
        if (r->value != 3 || !r->exact) {
          return fail("got " + std::to_string(r->value));
        }
      }
      return pass();
    }));
    checks.push_back(run_check(
        "End(B_1) is the only independent generating set", [&] {
          auto const b = independent_gen_bound_check(1);
          return expect(b.holds, "largest has " + std::to_string(b.max_size)
                                     + " elements");
        }));
    return checks;
  }

  checks.push_back(run_check("End(B_n) is not a band, r1 = 1", [&] {
    if (is_band(t)) {
      return fail("table is a band");
    }
    return rank_equals(small_rank(t, budget), 1);
  }));

  checks.push_back(run_check(
      n == 2 ? "r2 = 3, {phi_(1,2), xi_(1,1), xi_theta} generates"
             : "r2 = 4, {phi_(1,2), phi_(1,...,n), xi_(1,1), xi_theta} "
               "generates",
      [&] {
        auto const s = transposition_cycle_generators(monoid);
        if (!is_generating(s, t)) {
          return fail("witness does not generate");
        }
        return rank_equals(lower_rank(t, budget), n == 2 ? 3 : 4);
      }));

  checks.push_back(run_check(
      "r3 = n + 1, adjacent transpositions + xi_(1,1) + xi_theta is an "
      "independent generating set",
      [&] {
        auto const s = adjacent_transposition_generators(monoid);
        if (s.count() != n + 1 || !is_generating(s, t)
            || !is_independent(s, t)) {
          return fail("witness rejected");
        }
        return rank_equals(intermediate_rank(t, budget), n + 1);
      }));

  checks.push_back(run_check(
      "independent generating sets have at most n + 1 elements", [&] {
        if (n <= 3) {
          auto const b = independent_gen_bound_check(n);
          return expect(b.holds, "exhaustive; largest has "
                                     + std::to_string(b.max_size));
        }
        auto const r = intermediate_rank(t, budget);
        if (!r.exact) {
          return skip("budget exhausted");
        }
        return expect(r.value <= n + 1,
                      "pruned search; largest has " + std::to_string(r.value));
      }));

  checks.push_back(run_check(
      "r4 >= n + 2: {phi_id} + constants is independent", [&] {
        auto const u = identity_with_constants(monoid);
        return expect(u.count() == n + 2 && is_independent(u, t),
                      std::to_string(u.count()) + " elements");
      }));

  checks.push_back(run_check(
      "r5 = n! + n + 1, {xi_theta} is a smallest prime subset", [&] {
        auto const zero = ElementSet::of(size, {monoid.id_of_xi_theta()});
        if (!is_prime_subset(zero, t)) {
          return fail("{xi_theta} is not prime");
        }
        return rank_equals(large_rank(t, budget), factorial(n) + n + 1);
      }));

  checks.push_back(run_check(
      "Aut(B_n) = S_n: r3 = r4 = n - 1", [&] {
        auto const sym = subtable(t, monoid.automorphisms());
        auto const r3  = intermediate_rank(sym, budget);
        auto const r4  = upper_rank(sym, budget);
        auto o3 = rank_equals(r3, n - 1);
        if (o3.status != CheckStatus::pass) {
          return o3;
        }
        return rank_equals(r4, n - 1);
      }));

  return checks;
}

}  // namespace endrank::cli
