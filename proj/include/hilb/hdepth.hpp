#ifndef HILB_HDEPTH_HPP
#define HILB_HDEPTH_HPP

#include <hilb/bigint.hpp>
#include <hilb/ideals.hpp>

#include <optional>
#include <vector>

namespace hilb {

// Full subset enumeration is gated here by default (16.7M masks);
// callers may raise the limit explicitly up to 63.
inline constexpr int kDefaultSubsetLimit = 24;

// Inclusion-exclusion walks 2^(#generators) unions.
inline constexpr int kDefaultIncExcGenLimit = 25;

/// Counts alpha_0..alpha_n of a poset of subsets of [n].
struct AlphaVector {
  int n = 0;
  std::vector<BigInt> counts;  // size n+1

  /// max{j : alpha_j > 0}; -1 when identically zero.
  long long top_degree() const;

  bool operator==(const AlphaVector&) const = default;
};

/// Signed transform values beta_0^q..beta_q^q at one level q.
struct BetaTable {
  long long q = 0;
  std::vector<BigInt> values;  // size q+1

  bool operator==(const BetaTable&) const = default;
};

/// beta_k^q = sum_{j=0}^k (-1)^(k-j) C(q-j, k-j) alpha_j, exact.
BetaTable beta_table(const AlphaVector& alpha, long long q);

/// Inverse transform: alpha_k = sum_{j=0}^k C(q-j, k-j) beta_j^q for
/// 0 <= k <= q. Recovers the alpha prefix of length q+1.
std::vector<BigInt> alpha_from_beta(const BetaTable& beta);

// ---- alpha pipelines -----------------------------------------------------

/// alpha_j(I) = #{A : |A| = j, x_A in I}, by subset enumeration.
AlphaVector alpha_of_ideal(const SquarefreeIdeal& ideal,
                           int subset_limit = kDefaultSubsetLimit);

/// alpha of S/I. Requires I proper and nonzero.
AlphaVector alpha_of_quotient(const SquarefreeIdeal& ideal,
                              int subset_limit = kDefaultSubsetLimit);

/// alpha of J/I (J = nullopt means J = S). Requires I proper, nonzero,
/// I strictly inside J.
AlphaVector alpha_of_quotient(const std::optional<SquarefreeIdeal>& upper,
                              const SquarefreeIdeal& ideal,
                              int subset_limit = kDefaultSubsetLimit);

/// Independent pipeline: inclusion-exclusion over generator-subset lcms.
AlphaVector alpha_of_ideal_incexc(const SquarefreeIdeal& ideal,
                                  int gen_limit = kDefaultIncExcGenLimit);
AlphaVector alpha_of_quotient_incexc(const SquarefreeIdeal& ideal,
                                     int gen_limit = kDefaultIncExcGenLimit);

// ---- Hilbert depth -------------------------------------------------------

struct RejectedLevel {
  long long q = 0;  // rejected level
  long long k = 0;  // first index with beta_k^q < 0
  BigInt beta;
};

struct HdepthReport {
  AlphaVector alpha;
  long long q_star = 0;  // the Hilbert depth
  long long dim = 0;     // max{j : alpha_j > 0}
  BetaTable beta_at_qstar;
  std::vector<RejectedLevel> rejected;  // one witness per level above q_star
};

/// Scans q = n down to 0 and returns the first level whose beta table is
/// entrywise nonnegative (the maximum, by downward closedness), with a
/// negativity witness for every rejected level. Domain error on an
/// identically zero alpha. When alpha_0 >= 1 the report is checked
/// against the dimension bound q_star <= dim.
HdepthReport hdepth(const AlphaVector& alpha);

HdepthReport hdepth_of_ideal(const SquarefreeIdeal& ideal,
                             int subset_limit = kDefaultSubsetLimit);
HdepthReport hdepth_of_quotient(const SquarefreeIdeal& ideal,
                                int subset_limit = kDefaultSubsetLimit);

enum class Mode { quotient, ideal };

/// Hilbert depth of an arbitrary monomial ideal (or its quotient):
/// polarizes when not squarefree, computes in the squarefree world and
/// subtracts the number of added variables.
struct GeneralHdepth {
  HdepthReport polarized;   // report in the squarefree world
  long long extra_vars = 0; // N
  long long value = 0;      // hdepth in the original world
  long long dim = 0;        // dim in the original world
};

GeneralHdepth hdepth_general(const MonomialIdeal& ideal, Mode mode,
                             int subset_limit = kDefaultSubsetLimit);

/// beta_k^q(I) = C(n-q+k-1, k) - beta_k^q(S/I).
BetaTable beta_ideal_from_quotient(const BetaTable& beta_quotient, int n);

// ---- comparison criteria -------------------------------------------------

struct CompareWitness {
  long long k = 0;
  BigInt value;  // the offending beta
  BigInt bound;
};

/// Criteria relating hdepth(I) to q = hdepth(S/I), evaluated on the
/// quotient's beta tables alone:
///  - at_least:        beta_k^q(S/I)     <= C(n-q+k-1, k)   for 1 <= k <= q
///  - strict_plus_one: beta_{k+1}^{q+1}(S/I) <= C(n-q+k-1, k+1) for 0 <= k <= q
/// equivalent to hdepth(I) >= q and hdepth(I) >= q+1 respectively.
struct CompareReport {
  long long q = 0;
  bool at_least = false;
  bool strict_plus_one = false;
  std::vector<CompareWitness> at_least_violations;
  std::vector<CompareWitness> strict_violations;
};

/// Domain error when q is not the Hilbert depth of the given alpha.
CompareReport compare_criteria(const AlphaVector& alpha_quotient, long long q);

// ---- principal ideals ----------------------------------------------------

/// The four numeric profiles characterizing a principal squarefree ideal
/// generated in degree m, cross-checked against each other through the
/// transforms (throws std::logic_error if any pair disagrees):
///   alpha_k(I) = C(n-m, k-m)          beta_k^n(I)       = [k == m]
///   alpha_k(S/I) = C(n,k) - C(n-m,k-m) beta_k^{n-1}(S/I) = [k <= m-1]
struct PrincipalProfile {
  AlphaVector alpha_ideal;
  AlphaVector alpha_quotient;
  BetaTable beta_ideal_top;       // level n
  BetaTable beta_quotient_below;  // level n-1
};

PrincipalProfile principal_profile(int n, int m);

}  // namespace hilb

#endif
