#ifndef ENDRANK_RANKS_HPP
#define ENDRANK_RANKS_HPP

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "endrank/element_set.hpp"
#include "endrank/semigroup.hpp"

namespace endrank {

// Limits for a single search. Exhausting a budget is not an error: the
// search returns its best witness and marks the result inexact.
struct Budget {
  std::chrono::duration<double> wall = std::chrono::seconds{60};
  std::optional<std::uint64_t>  max_nodes;

  static Budget unlimited() {
    return Budget{std::chrono::duration<double>::max(), std::nullopt};
  }
  static Budget seconds(double s) {
    return Budget{std::chrono::duration<double>{s}, std::nullopt};
  }
};

enum class RankMethod { fast_path, exhaustive, pruned_search };

std::string_view to_string(RankMethod m) noexcept;

struct RankValue {
  std::size_t value = 0;
  // When false the budget ran out: for r1, r3, r4 `value` is a lower bound
  // (the best witness found), for r2 and r5 an upper bound.
  bool       exact  = true;
  RankMethod method = RankMethod::exhaustive;
  // r2: a generating set; r3: an independent generating set; r4: an
  // independent set; r5: a smallest prime subset. Always the
  // lexicographically smallest optimum when exact.
  std::optional<ElementSet> certificate;
};

// r1: the largest k such that every k-subset is independent. Non-bands
// with at least two elements take the fast path and return 1.
RankValue small_rank(SemigroupTable const& table,
                     Budget const&         budget = Budget::unlimited());
// The generic r1 search, without the non-band fast path.
RankValue small_rank_search(SemigroupTable const& table,
                            Budget const&         budget = Budget::unlimited());

// r2: size of a smallest generating set (size-ascending search).
RankValue lower_rank(SemigroupTable const& table,
                     Budget const&         budget = Budget::unlimited());

// r3: size of a largest independent generating set.
RankValue intermediate_rank(SemigroupTable const& table,
                            Budget const&         budget = Budget::unlimited());

// r4: size of a largest independent set (branch and bound over the
// hereditary family of independent sets).
RankValue upper_rank(SemigroupTable const& table,
                     Budget const&         budget = Budget::unlimited());

// A prime subset of least size, lexicographically smallest among those.
// Returns nullopt only if the budget runs out first.
std::optional<ElementSet> smallest_prime_subset(
    SemigroupTable const& table, Budget const& budget = Budget::unlimited());

// r5 = N - |V| + 1 for a smallest prime subset V. For N <= 10 the value is
// also recomputed from the definition and a mismatch throws logic_error.
RankValue large_rank(SemigroupTable const& table,
                     Budget const&         budget = Budget::unlimited());

// r5 straight from the definition: least k such that every k-subset
// generates. Exhaustive over all subsets; resource_error for N > 20.
std::size_t large_rank_by_definition(SemigroupTable const& table);

using RankSelection = std::array<bool, 5>;
inline constexpr RankSelection all_ranks{true, true, true, true, true};

struct RankReport {
  std::optional<std::size_t>              n;  // set for End(B_n) tables
  std::size_t                             size = 0;
  std::array<std::optional<RankValue>, 5> ranks;  // r1 .. r5
  bool                                    budget_exhausted = false;
};

// Computes the selected ranks, replays every certificate through the
// semigroup predicates and checks r1 <= r2 <= r3 <= r4 <= r5 over the
// exact values; either check failing throws std::logic_error. Each rank's
// search gets its own copy of `budget`.
RankReport rank_report(SemigroupTable const& table, Budget const& budget,
                       RankSelection const&       which = all_ranks,
                       std::optional<std::size_t> n     = std::nullopt);

enum class Verdict { confirmed, refuted_with_witness, inconclusive };

std::string_view to_string(Verdict v) noexcept;

struct ConjectureReport {
  std::size_t n         = 0;
  std::size_t predicted = 0;  // n + 2
  // {phi_id} + constants onto idempotents, checked independent.
  ElementSet lower_bound_witness;
  // Largest independent set size established: the exact r4 when the
  // verdict is confirmed, otherwise a lower bound.
  std::size_t best_size = 0;
  bool        exact     = false;
  Verdict     verdict   = Verdict::inconclusive;
  // An independent set of size n + 3, re-verified, when refuted.
  std::optional<ElementSet> refutation;
  std::uint64_t             nodes = 0;
};

// Builds End(B_n), checks the size n+2 witness, then searches for an
// independent set of size n+3. input_error for n < 2; resource_error when n
// is over the factorial budget.
ConjectureReport verify_conjecture(std::size_t   n,
                                   Budget const& budget = Budget::unlimited());

struct IndependentGeneratingBound {
  bool        holds    = false;
  std::size_t max_size = 0;
};

// Enumerates every subset of End(B_n) and checks that no independent
// generating set exceeds n + 1. For n = 1 the bound degenerates: it holds
// when End(B_1) itself is the only independent generating set.
// resource_error for n > 3.
IndependentGeneratingBound independent_gen_bound_check(std::size_t n);

}  // namespace endrank

#endif  // ENDRANK_RANKS_HPP
