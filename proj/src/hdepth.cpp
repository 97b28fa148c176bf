#include <hilb/combinatorics.hpp>
#include <hilb/hdepth.hpp>

#include <stdexcept>

namespace hilb {

namespace {

// C(n-q+k-1, k) with the k = 0 edge (top may be -1 there, value is 1).
BigInt complement_rhs(int n, long long q, long long k) {
  if (k == 0) return 1;
  return binom(n - q + k - 1, k);
}

// membership[mask] = 1 iff some generator divides x_mask, via the
// subset-sum DP over the boolean lattice.
std::vector<std::uint8_t> membership_table(const SquarefreeIdeal& ideal) {
  const std::size_t size = std::size_t(1) << ideal.n;
  std::vector<std::uint8_t> in(size, 0);
  for (SubsetMask g : ideal.gens) in[g] = 1;
  for (int b = 0; b < ideal.n; ++b) {
    const SubsetMask bit = SubsetMask(1) << b;
    for (SubsetMask mask = 0; mask < size; ++mask)
      if (mask & bit) in[mask] |= in[mask ^ bit];
  }
  return in;
}

void check_enumeration_gate(const SquarefreeIdeal& ideal, int subset_limit) {
  // 2^n bytes of scratch; 30 is already 1 GiB
  if (subset_limit > 30) subset_limit = 30;
  if (ideal.n > subset_limit)
    throw std::domain_error(
        "alpha enumeration: n = " + std::to_string(ideal.n) +
        " exceeds the subset limit " + std::to_string(subset_limit) +
        " (raise it explicitly to override, hard cap 30)");
}

void check_proper_nonzero(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero()) throw std::domain_error("hdepth: zero ideal");
  if (ideal.is_unit()) throw std::domain_error("hdepth: unit ideal");
}

}  // namespace

long long AlphaVector::top_degree() const {
  for (long long j = n; j >= 0; --j)
    if (counts[static_cast<std::size_t>(j)] > 0) return j;
  return -1;
}

BetaTable beta_table(const AlphaVector& alpha, long long q) {
  if (q < 0 || q > alpha.n)
    throw std::domain_error("beta_table: need 0 <= q <= n");
  BetaTable beta;
  beta.q = q;
  beta.values.assign(static_cast<std::size_t>(q) + 1, 0);
  for (long long k = 0; k <= q; ++k) {
    BigInt sum = 0;
    for (long long j = 0; j <= k; ++j) {
      BigInt term = binom(q - j, k - j) * alpha.counts[static_cast<std::size_t>(j)];
      if ((k - j) % 2 == 0)
        sum += term;
      else
        sum -= term;
    }
    beta.values[static_cast<std::size_t>(k)] = sum;
  }
  return beta;
}

std::vector<BigInt> alpha_from_beta(const BetaTable& beta) {
  std::vector<BigInt> alpha(beta.values.size());
  for (long long k = 0; k <= beta.q; ++k) {
    BigInt sum = 0;
    for (long long j = 0; j <= k; ++j)
      sum += binom(beta.q - j, k - j) * beta.values[static_cast<std::size_t>(j)];
    alpha[static_cast<std::size_t>(k)] = sum;
  }
  return alpha;
}

AlphaVector alpha_of_ideal(const SquarefreeIdeal& ideal, int subset_limit) {
  check_enumeration_gate(ideal, subset_limit);
  AlphaVector alpha;
  alpha.n = ideal.n;
  alpha.counts.assign(ideal.n + 1, 0);
  auto in = membership_table(ideal);
  for (std::size_t mask = 0; mask < in.size(); ++mask)
    if (in[mask])
      ++alpha.counts[static_cast<std::size_t>(subset_card(SubsetMask(mask)))];
  return alpha;
}

AlphaVector alpha_of_quotient(const SquarefreeIdeal& ideal, int subset_limit) {
  return alpha_of_quotient(std::nullopt, ideal, subset_limit);
}

AlphaVector alpha_of_quotient(const std::optional<SquarefreeIdeal>& upper,
                              const SquarefreeIdeal& ideal, int subset_limit) {
  check_proper_nonzero(ideal);
  if (upper) {
    if (upper->n != ideal.n)
      throw std::domain_error("alpha_of_quotient: mixed ambient sizes");
    if (!upper->contains_ideal(ideal))
      throw std::domain_error("alpha_of_quotient: I is not contained in J");
    if (*upper == ideal)
      throw std::domain_error("alpha_of_quotient: I = J gives an empty poset");
  }
  AlphaVector inner = alpha_of_ideal(ideal, subset_limit);
  AlphaVector alpha;
  alpha.n = ideal.n;
  alpha.counts.assign(ideal.n + 1, 0);
  if (upper && !upper->is_unit()) {
    AlphaVector outer = alpha_of_ideal(*upper, subset_limit);
    for (int j = 0; j <= ideal.n; ++j)
      alpha.counts[j] = outer.counts[j] - inner.counts[j];
  } else {
    for (int j = 0; j <= ideal.n; ++j)
      alpha.counts[j] = binom(ideal.n, j) - inner.counts[j];
  }
  return alpha;
}

namespace {

void incexc_rec(const std::vector<SubsetMask>& gens, std::size_t idx,
                SubsetMask uni, bool odd, std::vector<long long>& coef) {
  if (idx == gens.size()) {
    if (uni) coef[subset_card(uni)] += odd ? 1 : -1;
    return;
  }
  incexc_rec(gens, idx + 1, uni, odd, coef);
  incexc_rec(gens, idx + 1, uni | gens[idx], !odd, coef);
}

}  // namespace

AlphaVector alpha_of_ideal_incexc(const SquarefreeIdeal& ideal, int gen_limit) {
  if (static_cast<int>(ideal.gens.size()) > gen_limit)
    throw std::domain_error(
        "alpha inclusion-exclusion: too many generators (" +
        std::to_string(ideal.gens.size()) + " > " + std::to_string(gen_limit) +
        ")");
  std::vector<long long> coef(ideal.n + 1, 0);
  incexc_rec(ideal.gens, 0, 0, false, coef);
  AlphaVector alpha;
  alpha.n = ideal.n;
  alpha.counts.assign(ideal.n + 1, 0);
  for (int u = 0; u <= ideal.n; ++u) {
    if (coef[u] == 0) continue;
    for (int j = u; j <= ideal.n; ++j)
      alpha.counts[j] += BigInt(coef[u]) * binom(ideal.n - u, j - u);
  }
  return alpha;
}

AlphaVector alpha_of_quotient_incexc(const SquarefreeIdeal& ideal, int gen_limit) {
  check_proper_nonzero(ideal);
  AlphaVector inner = alpha_of_ideal_incexc(ideal, gen_limit);
  AlphaVector alpha;
  alpha.n = ideal.n;
  alpha.counts.assign(ideal.n + 1, 0);
  for (int j = 0; j <= ideal.n; ++j)
    alpha.counts[j] = binom(ideal.n, j) - inner.counts[j];
  return alpha;
}

HdepthReport hdepth(const AlphaVector& alpha) {
  if (alpha.counts.size() != static_cast<std::size_t>(alpha.n) + 1)
    throw std::domain_error("hdepth: alpha has wrong length");
  if (alpha.top_degree() < 0)
    throw std::domain_error("hdepth: alpha is identically zero");
  for (const auto& c : alpha.counts)
    if (c < 0) throw std::domain_error("hdepth: negative alpha entry");

  HdepthReport report;
  report.alpha = alpha;
  report.dim = alpha.top_degree();
  for (long long q = alpha.n; q >= 0; --q) {
    BetaTable beta = beta_table(alpha, q);
    long long neg = -1;
    for (long long k = 0; k <= q; ++k)
      if (beta.values[static_cast<std::size_t>(k)] < 0) {
        neg = k;
        break;
      }
    if (neg >= 0) {
      report.rejected.push_back(
          {q, neg, beta.values[static_cast<std::size_t>(neg)]});
    } else {
      report.q_star = q;
      report.beta_at_qstar = std::move(beta);
      break;
    }
  }
  // level 0 is always feasible (beta_0^0 = alpha_0 >= 0), so q_star is set
  if (alpha.counts[0] >= 1 && report.q_star > report.dim)
    throw std::logic_error("hdepth: dimension bound violated (q* > dim)");
  return report;
}

HdepthReport hdepth_of_ideal(const SquarefreeIdeal& ideal, int subset_limit) {
  check_proper_nonzero(ideal);
  return hdepth(alpha_of_ideal(ideal, subset_limit));
}

HdepthReport hdepth_of_quotient(const SquarefreeIdeal& ideal, int subset_limit) {
  return hdepth(alpha_of_quotient(ideal, subset_limit));
}

GeneralHdepth hdepth_general(const MonomialIdeal& ideal, Mode mode,
                             int subset_limit) {
  if (ideal.is_zero()) throw std::domain_error("hdepth_general: zero ideal");
  if (ideal.is_unit()) throw std::domain_error("hdepth_general: unit ideal");

  GeneralHdepth out;
  SquarefreeIdeal sq;
  if (ideal.is_squarefree()) {
    sq = squarefree_from_monomial_ideal(ideal);
    out.extra_vars = 0;
  } else {
    Polarization pol = polarize(ideal);
    sq = pol.ideal;
    out.extra_vars = pol.extra_vars;
  }
  out.polarized = mode == Mode::ideal ? hdepth_of_ideal(sq, subset_limit)
                                      : hdepth_of_quotient(sq, subset_limit);
  out.value = out.polarized.q_star - out.extra_vars;
  out.dim = mode == Mode::ideal ? ideal.n : out.polarized.dim - out.extra_vars;
  return out;
}

BetaTable beta_ideal_from_quotient(const BetaTable& beta_quotient, int n) {
  if (beta_quotient.q > n)
    throw std::domain_error("beta_ideal_from_quotient: level exceeds n");
  BetaTable beta;
  beta.q = beta_quotient.q;
  beta.values.resize(beta_quotient.values.size());
  for (long long k = 0; k <= beta.q; ++k)
    beta.values[static_cast<std::size_t>(k)] =
        complement_rhs(n, beta.q, k) -
        beta_quotient.values[static_cast<std::size_t>(k)];
  return beta;
}

CompareReport compare_criteria(const AlphaVector& alpha_quotient, long long q) {
  HdepthReport check = hdepth(alpha_quotient);
  if (check.q_star != q)
    throw std::domain_error("compare_criteria: q = " + std::to_string(q) +
                            " is not the Hilbert depth (" +
                            std::to_string(check.q_star) + ")");
  const int n = alpha_quotient.n;
  CompareReport report;
  report.q = q;
  report.at_least = true;
  report.strict_plus_one = true;

  const BetaTable& bq = check.beta_at_qstar;
  for (long long k = 1; k <= q; ++k) {
    BigInt bound = binom(n - q + k - 1, k);
    const BigInt& value = bq.values[static_cast<std::size_t>(k)];
    if (value > bound) {
      report.at_least = false;
      report.at_least_violations.push_back({k, value, bound});
    }
  }

  if (q + 1 > n) {
    // hdepth(I) <= n, so >= q+1 = n+1 is impossible (and q = n cannot
    // occur for a proper quotient anyway)
    report.strict_plus_one = false;
  } else {
    BetaTable bq1 = beta_table(alpha_quotient, q + 1);
    for (long long k = 0; k <= q; ++k) {
      BigInt bound = binom(n - q + k - 1, k + 1);
      const BigInt& value = bq1.values[static_cast<std::size_t>(k + 1)];
      if (value > bound) {
        report.strict_plus_one = false;
        report.strict_violations.push_back({k + 1, value, bound});
      }
    }
  }
  return report;
}

PrincipalProfile principal_profile(int n, int m) {
  if (!(1 <= m && m <= n))
    throw std::domain_error("principal_profile: need 1 <= m <= n");
  if (n > kMaxVars)
    throw std::domain_error("principal_profile: n exceeds 63");

  PrincipalProfile profile;
  profile.alpha_ideal.n = n;
  profile.alpha_ideal.counts.assign(n + 1, 0);
  profile.alpha_quotient.n = n;
  profile.alpha_quotient.counts.assign(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    profile.alpha_ideal.counts[k] = binom(n - m, k - m);
    profile.alpha_quotient.counts[k] = binom(n, k) - binom(n - m, k - m);
  }

  profile.beta_ideal_top = beta_table(profile.alpha_ideal, n);
  profile.beta_quotient_below = beta_table(profile.alpha_quotient, n - 1);

  for (int k = 0; k <= n; ++k) {
    if (profile.beta_ideal_top.values[k] != (k == m ? 1 : 0))
      throw std::logic_error("principal_profile: beta^n(I) mismatch");
    if (k <= n - 1 &&
        profile.beta_quotient_below.values[k] != (k <= m - 1 ? 1 : 0))
      throw std::logic_error("principal_profile: beta^{n-1}(S/I) mismatch");
  }

  // the enumerated ideal generated by the top-m variables agrees
  if (n <= 20) {
    SubsetMask u = full_mask(n) & ~full_mask(n - m);
    SquarefreeIdeal principal = minimalize_squarefree({u}, n);
    if (alpha_of_ideal(principal) != profile.alpha_ideal ||
        alpha_of_quotient(principal) != profile.alpha_quotient)
      throw std::logic_error("principal_profile: enumeration mismatch");
  }

  // inverse transform closes the loop
  auto back = alpha_from_beta(profile.beta_quotient_below);
  for (int k = 0; k <= n - 1; ++k)
    if (back[k] != profile.alpha_quotient.counts[k])
      throw std::logic_error("principal_profile: inverse transform mismatch");

  return profile;
}

}  // namespace hilb
