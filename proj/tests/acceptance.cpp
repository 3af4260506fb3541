// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "endrank/brandt.hpp"
#include "endrank/endo.hpp"
#include "endrank/ranks.hpp"
#include "oracle.hpp"
#include "random_tables.hpp"

using namespace endrank;
using clock_type = std::chrono::steady_clock;

namespace {

// Runtime limits, seconds.
constexpr double limit_c1_small = 1.0;
constexpr double limit_c1_n3    = 60.0;
constexpr double limit_c3       = 10.0;
constexpr double limit_c4_n4    = 300.0;
constexpr double limit_c5_n4    = 600.0;
constexpr double limit_c6       = 10.0;
constexpr double limit_c7       = 60.0;

constexpr int random_tables = 50;

double since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Criterion {
  bool        ok = true;
  std::string why;

  void require(bool cond, std::string const& what) {
    if (!cond && ok) {
      ok  = false;
      why = what;
    }
  }
};

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

Criterion c1_classification() {
  Criterion c;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const t0     = clock_type::now();
    auto const oracle = enumerate_endomorphisms_oracle(n);
    auto const m      = enumerate_endomorphisms_structural(n);
    double const dt   = since(t0);
    auto const tag    = "n=" + std::to_string(n);
    c.require(oracle == m.elements(), tag + ": oracle differs");
    c.require(m.size() == factorial(n) + n + 1, tag + ": wrong size");
    c.require(dt < (n <= 2 ? limit_c1_small : limit_c1_n3), tag + ": too slow");
  }
  return c;
}

Criterion c2_small_rank() {
  Criterion c;
  for (std::size_t n = 2; n <= 4; ++n) {
    auto const t = enumerate_endomorphisms_structural(n).table();
    auto const r = small_rank(t);
    c.require(r.exact && r.value == 1, "r1 != 1 at n=" + std::to_string(n));
    if (n <= 3) {
      c.require(small_rank_search(t).value == 1,
                "generic search disagrees at n=" + std::to_string(n));
    }
  }
  c.require(small_rank(enumerate_endomorphisms_structural(1).table()).value == 3,
            "r1(End(B_1)) != 3");
  return c;
}

Criterion c3_lower_rank() {
  Criterion c;
  for (std::size_t n = 2; n <= 4; ++n) {
    auto const t0  = clock_type::now();
    auto const m   = enumerate_endomorphisms_structural(n);
    auto const r   = lower_rank(m.table());
    auto const tag = "n=" + std::to_string(n);
    c.require(r.exact && r.value == (n == 2 ? 3u : 4u), tag + ": wrong r2");
    c.require(is_generating(*r.certificate, m.table()),
              tag + ": certificate does not generate");
    if (n >= 3) {
      auto const s = transposition_cycle_generators(m);
      c.require(s.count() == 4 && is_generating(s, m.table()),
                tag + ": S does not generate");
    }
    c.require(since(t0) < limit_c3, tag + ": too slow");
  }
  return c;
}

Criterion c4_intermediate_rank() {
  Criterion c;
  for (std::size_t n = 2; n <= 4; ++n) {
    auto const t0  = clock_type::now();
    auto const m   = enumerate_endomorphisms_structural(n);
    auto const tag = "n=" + std::to_string(n);
    auto const r   = intermediate_rank(m.table());
    c.require(r.exact && r.value == n + 1, tag + ": wrong r3");
    auto const t = adjacent_transposition_generators(m);
    c.require(t.count() == n + 1 && is_generating(t, m.table())
                  && is_independent(t, m.table()),
              tag + ": T is not an independent generating set");
    if (n <= 3) {
      auto const b = independent_gen_bound_check(n);
      c.require(b.holds && b.max_size == n + 1,
                tag + ": exhaustive bound check failed");
    }
    c.require(since(t0) < limit_c4_n4, tag + ": too slow");
  }
  return c;
}

Criterion c5_upper_rank() {
  Criterion c;
  for (std::size_t n = 2; n <= 4; ++n) {
    auto const m   = enumerate_endomorphisms_structural(n);
    auto const tag = "n=" + std::to_string(n);
    auto const w   = identity_with_constants(m);
    c.require(w.count() == n + 2 && is_independent(w, m.table()),
              tag + ": witness not independent");
  }
  auto const e2 = enumerate_endomorphisms_structural(2).table();
  auto const r2 = upper_rank(e2);
  c.require(r2.exact && r2.value == 4, "r4(End(B_2)) != 4");
  c.require(r2.value == oracle::ranks(e2).r[3], "n=2 disagrees with oracle");

  auto const e3 = enumerate_endomorphisms_structural(3).table();
  auto const r3 = upper_rank(e3);
  c.require(r3.exact && r3.value == oracle::ranks(e3).r[3],
            "n=3 not definitive or disagrees with oracle");

  auto const t0 = clock_type::now();
  auto const v  = verify_conjecture(4, Budget::seconds(limit_c5_n4));
  c.require(since(t0) < limit_c5_n4 + 5.0, "n=4 overran its budget");
  if (v.verdict == Verdict::refuted_with_witness) {
    auto const t4 = enumerate_endomorphisms_structural(4).table();
    c.require(v.refutation && is_independent(*v.refutation, t4),
              "refutation does not re-verify");
  }
  std::printf("  n=4 conjecture verdict: %s, r4 %s %zu\n",
              std::string(to_string(v.verdict)).c_str(),
              v.exact ? "=" : ">=", v.best_size);
  return c;
}

Criterion c6_large_rank() {
  Criterion c;
  auto const t0 = clock_type::now();
  for (std::size_t n = 2; n <= 4; ++n) {
    auto const m   = enumerate_endomorphisms_structural(n);
    auto const tag = "n=" + std::to_string(n);
    auto const xi  = ElementSet::of(m.size(), {m.id_of_xi_theta()});
    c.require(is_prime_subset(xi, m.table()), tag + ": {xi_theta} not prime");
    auto const v = smallest_prime_subset(m.table());
    c.require(v && v->count() == 1, tag + ": smallest prime subset not of size 1");
    // for n = 2 phi_(1 2) is another singleton prime subset and comes first
    if (n >= 3) c.require(v && *v == xi, tag + ": smallest prime != {xi_theta}");
    auto const r = large_rank(m.table());
    c.require(r.exact && r.value == factorial(n) + n + 1, tag + ": wrong r5");
    if (n <= 3) {
      c.require(large_rank_by_definition(m.table()) == r.value,
                tag + ": definition disagrees");
    }
  }
  c.require(since(t0) < limit_c6, "too slow");
  return c;
}

Criterion c7_symmetric_group() {
  Criterion c;
  auto const t0 = clock_type::now();
  for (std::size_t n = 3; n <= 4; ++n) {
    auto const m   = enumerate_endomorphisms_structural(n);
    auto const sn  = subtable(m.table(), m.automorphisms());
    auto const tag = "n=" + std::to_string(n);
    auto const r3  = intermediate_rank(sn);
    auto const r4  = upper_rank(sn);
    c.require(r3.exact && r3.value == n - 1, tag + ": r3 != n-1");
    c.require(r4.exact && r4.value == n - 1, tag + ": r4 != n-1");
  }
  c.require(since(t0) < limit_c7, "too slow");
  return c;
}

void soundness_on(Criterion& c, SemigroupTable const& t,
                  std::string const& tag) {
  RankReport report;
  try {
    report = rank_report(t, Budget::unlimited());
  } catch (std::logic_error const& e) {
    c.require(false, tag + ": " + e.what());
    return;
  }
  std::size_t prev = 0;
  for (std::size_t k = 0; k < 5; ++k) {
    auto const& v = *report.ranks[k];
    c.require(v.exact && prev <= v.value, tag + ": chain broken");
    prev = v.value;
  }
  c.require(is_generating(*report.ranks[1]->certificate, t), tag + ": r2 replay");
  auto const& g = *report.ranks[2]->certificate;
  c.require(is_generating(g, t) && is_independent(g, t), tag + ": r3 replay");
  c.require(is_independent(*report.ranks[3]->certificate, t), tag + ": r4 replay");
  c.require(is_prime_subset(*report.ranks[4]->certificate, t), tag + ": r5 replay");

  if (t.size() > 10) return;
  auto const o = oracle::ranks(t);
  for (std::size_t k = 0; k < 5; ++k)
    c.require(report.ranks[k]->value == o.r[k], tag + ": disagrees with oracle");
  auto const total = oracle::mask_t{1} << t.size();
  for (oracle::mask_t u = 0; u < total; ++u) {
    auto const s   = oracle::to_set(u, t.size());
    auto const cl  = closure(s, t);
    c.require(s.is_subset_of(cl) && closure(cl, t) == cl,
              tag + ": closure not extensive or idempotent");
    c.require(oracle::to_mask(cl) == oracle::closure(u, t),
              tag + ": closure disagrees with oracle");
    bool const ind = is_independent(s, t);
    for (oracle::mask_t rest = u; rest != 0; rest &= rest - 1) {
      auto const smaller = u & ~(rest & -rest);
      auto const sub     = oracle::to_set(smaller, t.size());
      c.require(closure(sub, t).is_subset_of(cl), tag + ": closure not monotone");
      if (ind) c.require(is_independent(sub, t), tag + ": heredity fails");
    }
  }
}

Criterion c8_soundness() {
  Criterion c;
  for (std::size_t n = 1; n <= 3; ++n) {
    soundness_on(c, build_brandt(n), "B_" + std::to_string(n));
    soundness_on(c, enumerate_endomorphisms_structural(n).table(),
                 "End(B_" + std::to_string(n) + ")");
  }
  soundness_on(c, enumerate_endomorphisms_structural(4).table(), "End(B_4)");
  std::mt19937 rng(20261016);
  for (int i = 0; i < random_tables; ++i) {
    auto const t = testing_support::random_semigroup(1 + i % 5, rng);
    soundness_on(c, t, "random table " + std::to_string(i));
  }
  return c;
}

}  // namespace

int main() {
  struct Entry {
    char const*                 name;
    std::function<Criterion()> run;
  };
  Entry const entries[] = {
      {"1 endomorphism classification", c1_classification},
      {"2 small rank", c2_small_rank},
      {"3 lower rank", c3_lower_rank},
      {"4 intermediate rank", c4_intermediate_rank},
      {"5 upper rank", c5_upper_rank},
      {"6 large rank", c6_large_rank},
      {"7 symmetric group cross-check", c7_symmetric_group},
      {"8 engine soundness", c8_soundness},
  };
  int failures = 0;
  for (auto const& e : entries) {
    auto const t0 = clock_type::now();
    Criterion  c;
    try {
      c = e.run();
    } catch (std::exception const& ex) {
      c.require(false, std::string("exception: ") + ex.what());
    }
    std::printf("%s  criterion %s  (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL",
                e.name, since(t0), c.ok ? "" : "  ", c.why.c_str());
    std::fflush(stdout);
    failures += c.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
