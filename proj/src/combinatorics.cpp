#include <hilb/combinatorics.hpp>

#include <stdexcept>

namespace hilb {

namespace {

std::vector<std::vector<BigInt>> build_pascal_table() {
  std::vector<std::vector<BigInt>> rows(kBinomTableRows);
  for (long long n = 0; n < kBinomTableRows; ++n) {
    rows[n].resize(static_cast<std::size_t>(n) + 1);
    rows[n][0] = 1;
    rows[n][static_cast<std::size_t>(n)] = 1;
    for (long long k = 1; k < n; ++k)
      rows[n][static_cast<std::size_t>(k)] =
          rows[n - 1][static_cast<std::size_t>(k - 1)] +
          rows[n - 1][static_cast<std::size_t>(k)];
  }
  return rows;
}

const std::vector<std::vector<BigInt>>& pascal_table() {
  static const std::vector<std::vector<BigInt>> table = build_pascal_table();
  return table;
}

// Product formula; division at step i is exact because the running
// product is C(n-k+i, i) * i!... / i! at each stage.
BigInt binom_multiplicative(const BigInt& n, long long k) {
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace

BigInt binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (n < kBinomTableRows)
    return pascal_table()[static_cast<std::size_t>(n)]
                         [static_cast<std::size_t>(k)];
  if (k > n - k) k = n - k;
  return binom_multiplicative(BigInt(n), k);
}

BigInt binom_big(const BigInt& n, long long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  if (n < kBinomTableRows) return binom(n.convert_to<long long>(), k);
  return binom_multiplicative(n, k);
}

BigInt magic_identity_rhs(long long n, long long q, long long k) {
  if (!(0 <= k && k <= q && q <= n))
    throw std::domain_error("magic_identity_rhs: need 0 <= k <= q <= n");
  if (k == 0) return 1;
  return binom(n - q + k - 1, k);
}

BigInt BinomialExpansion::value() const {
  BigInt sum = 0;
  for (const auto& t : terms) sum += binom_big(t.top, t.bottom);
  return sum;
}

BinomialExpansion kk_expand(const BigInt& ell, long long k) {
  if (ell < 1) throw std::domain_error("kk_expand: ell must be positive");
  if (k < 1) throw std::domain_error("kk_expand: k must be positive");

  BinomialExpansion expansion;
  BigInt rest = ell;
  long long bottom = k;
  while (rest > 0) {
    // maximal top with C(top, bottom) <= rest
    BigInt top = bottom;
    if (bottom == 1) {
      top = rest;
    } else {
      BigInt step = 1;
      while (binom_big(top + step, bottom) <= rest) {
        top += step;
        step *= 2;
      }
      while (step > 0) {
        if (binom_big(top + step, bottom) <= rest) top += step;
        step /= 2;
      }
    }
    expansion.terms.push_back({top, bottom});
    rest -= binom_big(top, bottom);
    --bottom;
  }
  return expansion;
}

BigInt kk_upper(const BigInt& ell, long long k) {
  if (k < 1) throw std::domain_error("kk_upper: k must be positive");
  if (ell < 0) throw std::domain_error("kk_upper: ell must be nonnegative");
  if (ell == 0) return 0;
  BigInt sum = 0;
  for (const auto& t : kk_expand(ell, k).terms)
    sum += binom_big(t.top, t.bottom + 1);
  return sum;
}

BigInt shadow_lower_bound(const BigInt& alpha_k, long long k) {
  if (k < 2) throw std::domain_error("shadow_lower_bound: k must be >= 2");
  if (alpha_k < 1)
    throw std::domain_error("shadow_lower_bound: alpha_k must be positive");
  BigInt sum = 0;
  for (const auto& t : kk_expand(alpha_k, k).terms)
    sum += binom_big(t.top, t.bottom - 1);
  return sum;
}

FeasibilityResult fvector_feasible(const FVector& f) {
  if (f.entries.empty() || f.entries.front() != 1)
    throw std::domain_error("fvector_feasible: f_{-1} must be 1");
  for (const auto& e : f.entries)
    if (e < 0) throw std::domain_error("fvector_feasible: negative entry");

  FeasibilityResult r;
  std::size_t len = f.entries.size();
  while (len > 1 && f.entries[len - 1] == 0) --len;
  if (len < f.entries.size()) r.truncated_at = static_cast<long long>(len) - 1;

  // entries[idx] is f_{idx-1}; conditions run over f-indices 1..d-1.
  for (std::size_t idx = 2; idx < len; ++idx) {
    const BigInt& prev = f.entries[idx - 1];
    const BigInt& cur = f.entries[idx];
    long long i = static_cast<long long>(idx) - 1;
    if (cur <= 0 || cur > kk_upper(prev, i)) {
      r.feasible = false;
      r.violated_index = i;
      return r;
    }
  }
  r.feasible = true;
  return r;
}

}  // namespace hilb
