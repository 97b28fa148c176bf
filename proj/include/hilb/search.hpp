#ifndef HILB_SEARCH_HPP
#define HILB_SEARCH_HPP

#include <hilb/hdepth.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hilb {

// Full feasible-alpha sweeps are gated here by default.
inline constexpr int kDefaultEnumCap = 14;

/// Optional pins on alpha coordinates (index j pins alpha_j).
struct AlphaConstraints {
  std::vector<std::optional<BigInt>> pinned;

  bool admits(std::size_t j, const BigInt& value) const {
    return j >= pinned.size() || !pinned[j] || *pinned[j] == value;
  }
};

/// Streams every vector (1, a_1, ..., a_d, 0, ..., 0) over [n] with
/// 0 < a_i <= min(C(n, i), kk_upper(a_{i-1}, i-1)) along the chain —
/// exactly the alpha-vectors of simplicial complexes on [n]. Coordinates
/// are explored high to low. Domain error when n exceeds the cap.
void enumerate_feasible_alpha(int n, const AlphaConstraints& constraints,
                              const std::function<void(const AlphaVector&)>& yield,
                              int cap = kDefaultEnumCap);

std::vector<AlphaVector> collect_feasible_alpha(int n,
                                                const AlphaConstraints& constraints = {},
                                                int cap = kDefaultEnumCap);

/// Compressed realization: the complex whose size-c faces are the first
/// alpha_c subsets of [n] in colex order; returns its Stanley-Reisner
/// ideal. Postcondition (checked): alpha_of_quotient gives back alpha.
/// Domain error when alpha is not feasible.
SquarefreeIdeal realize_colex(const AlphaVector& alpha,
                              int subset_limit = kDefaultSubsetLimit);

// ---- hunting -------------------------------------------------------------

enum class PredicateKind {
  // hdepth(I) < hdepth(S/I), certified by a Lemma-lem22 violation and
  // re-verified against the directly computed hdepth(I)
  hdepth_ideal_lt_quotient,
  // beta_k^q(S/I) > C(n-q+k-1, k) for some (or a pinned) k in 1..q
  at_least_fails,
  // beta_{k+1}^{q+1}(S/I) > C(n-q+k-1, k+1) for some (or a pinned) k+1
  strict_plus_one_fails,
  // beta_k^q(S/I) > bound for an explicit (k, bound)
  custom_beta,
};

struct SearchPredicate {
  PredicateKind kind = PredicateKind::hdepth_ideal_lt_quotient;
  std::optional<long long> k;     // pin the violation index (beta subscript)
  std::optional<BigInt> bound;    // custom_beta only
};

struct SearchLimits {
  long long node_budget = 10'000'000;
  long long time_budget_ms = 0;  // 0 = off; a safety net, breaks determinism
  bool sample = false;           // random-walk sampling instead of DFS
  long long sample_count = 100'000;
};

struct SearchSpec {
  int n = 0;
  std::vector<long long> q_range;  // empty = all of [0, n-1]
  SearchPredicate predicate;
  SearchLimits limits;
  std::uint64_t seed = 0;  // required in sample mode
  AlphaConstraints constraints;
  int threads = 1;
  int enum_cap = kDefaultEnumCap;
};

struct Violation {
  long long q = 0;  // level of the violating beta
  long long k = 0;
  BigInt value;
  BigInt bound;
};

struct Finding {
  AlphaVector alpha;
  SquarefreeIdeal realization;
  HdepthReport quotient_report;
  HdepthReport ideal_report;
  Violation violation;
};

struct SearchOutcome {
  std::vector<Finding> findings;  // sorted by alpha, lexicographically
  long long nodes = 0;
  long long leaves = 0;
  long long pruned_infeasible = 0;  // beta^q sign pruning
  long long pruned_no_violation = 0;
  bool budget_exhausted = false;
};

/// Enumerates (or samples) Kruskal-Katona-feasible alpha-vectors with
/// hdepth(S/I) in q_range, keeps those triggering the predicate, and
/// re-verifies every finding through realize_colex before emission.
/// Deterministic for fixed spec, seed and budgets, whatever the thread
/// count. Domain error on an invalid spec.
SearchOutcome hunt(const SearchSpec& spec);

/// Spec files: either a single JSON object or key = value lines.
/// Keys: n, q (single level or "lo..hi"), predicate, k, bound, nodes,
/// samples, mode (dfs|sample), seed, threads, alpha_prefix
/// (comma-separated pins for alpha_1, alpha_2, ...), cap, time_ms.
SearchSpec parse_search_spec(const std::string& text);

}  // namespace hilb

#endif
