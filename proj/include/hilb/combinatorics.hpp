#ifndef HILB_COMBINATORICS_HPP
#define HILB_COMBINATORICS_HPP

#include <hilb/bigint.hpp>

#include <vector>

namespace hilb {

/// C(n, k), exact. Returns 0 when k < 0 or k > n (and for n < 0).
/// Small arguments are served from a memoized Pascal table of
/// kBinomTableRows rows; larger ones fall back to the multiplicative
/// formula with exact intermediate division.
BigInt binom(long long n, long long k);

/// Same, for tops that may not fit a machine word.
BigInt binom_big(const BigInt& n, long long k);

// Rows of the memoized Pascal triangle. Above this, binom() evaluates
// multiplicatively each call.
inline constexpr long long kBinomTableRows = 128;

/// C(n-q+k-1, k): the closed form of the alternating sum
///   sum_{j=0}^k (-1)^(k-j) C(q-j, k-j) C(n, j).
/// Requires 0 <= k <= q <= n. At k = 0 the value is 1 even when q = n
/// (the top index is -1 there, but C(m, 0) = 1 for every m).
BigInt magic_identity_rhs(long long n, long long q, long long k);

// One C(top, bottom) summand of a Macaulay expansion.
struct BinomialTerm {
  BigInt top;
  long long bottom = 0;

  bool operator==(const BinomialTerm&) const = default;
};

/// Greedy k-binomial (Macaulay) representation of a positive integer:
///   ell = C(n_k, k) + C(n_{k-1}, k-1) + ... + C(n_j, j),
/// tops strictly decreasing, bottoms consecutive from k down to j >= 1,
/// n_j >= j. The representation is unique for fixed (ell, k).
struct BinomialExpansion {
  std::vector<BinomialTerm> terms;  // bottoms descend from k

  BigInt value() const;
};

/// Greedy expansion of ell with leading parameter k. Domain error when
/// ell < 1 or k < 1.
BinomialExpansion kk_expand(const BigInt& ell, long long k);

/// The Kruskal-Katona bound ell^(k): every C(n_i, i) of the expansion
/// becomes C(n_i, i+1). Largest possible next-level count when ell sets
/// of size k are present. kk_upper(0, k) = 0 (empty family, empty bound).
BigInt kk_upper(const BigInt& ell, long long k);

/// Minimum admissible count one level down: every C(n_i, i) of the
/// expansion of alpha_k becomes C(n_i, i-1). Requires k >= 2, alpha_k >= 1.
BigInt shadow_lower_bound(const BigInt& alpha_k, long long k);

/// Candidate f-vector (f_{-1} = 1, f_0, ..., f_{d-1}); entries[0] is f_{-1}.
struct FVector {
  std::vector<BigInt> entries;
};

struct FeasibilityResult {
  bool feasible = false;
  // Smallest f-index i with the Kruskal-Katona condition violated
  // (meaningful only when !feasible).
  long long violated_index = -1;
  // f-index of the first trailing zero dropped before the check; -1 if
  // nothing was truncated.
  long long truncated_at = -1;
};

/// Kruskal-Katona feasibility: after dropping trailing zeros, true iff
/// 0 < f_i <= kk_upper(f_{i-1}, i) for every 1 <= i <= d-1.
/// Domain error when f_{-1} != 1 or an entry is negative.
FeasibilityResult fvector_feasible(const FVector& f);

}  // namespace hilb

#endif
