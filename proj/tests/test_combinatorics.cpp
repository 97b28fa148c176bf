#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hilb/combinatorics.hpp>

#include <cstdint>
#include <set>
#include <vector>

using hilb::BigInt;
using hilb::binom;
using hilb::fvector_feasible;
using hilb::FVector;
using hilb::kk_expand;
using hilb::kk_upper;
using hilb::magic_identity_rhs;
using hilb::shadow_lower_bound;

namespace {

// Independent oracle: Pascal triangle by row recurrence only.
std::vector<std::vector<BigInt>> pascal_rows(int max_n) {
  std::vector<std::vector<BigInt>> rows(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    rows[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return rows;
}

// Independent oracle: the alternating sum on the left of the identity.
BigInt magic_lhs(long long n, long long q, long long k) {
  BigInt sum = 0;
  for (long long j = 0; j <= k; ++j) {
    BigInt term = binom(q - j, k - j) * binom(n, j);
    if ((k - j) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

// ---- exhaustive simplicial-complex census, test-local ----
//
// A family of subsets of [n] is a bitmask over the 2^n subset indices.

bool downward_closed(std::uint64_t fam, int n) {
  for (int s = 0; s < (1 << n); ++s) {
    if (!(fam >> s & 1)) continue;
    for (int b = 0; b < n; ++b)
      if ((s >> b & 1) && !(fam >> (s ^ (1 << b)) & 1)) return false;
  }
  return true;
}

std::vector<long long> f_vector_of(std::uint64_t fam, int n) {
  std::vector<long long> counts(n + 1, 0);
  for (int s = 0; s < (1 << n); ++s)
    if (fam >> s & 1) ++counts[std::popcount(static_cast<unsigned>(s))];
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

// DFS over subsets in a linear extension of inclusion; a subset may be
// added only if all its covers are present.
void enumerate_families_rec(int n, const std::vector<int>& order, std::size_t pos,
                            std::uint64_t fam, std::vector<std::uint64_t>& out) {
  if (pos == order.size()) {
    out.push_back(fam);
    return;
  }
  int s = order[pos];
  enumerate_families_rec(n, order, pos + 1, fam, out);
  bool ok = true;
  for (int b = 0; b < n && ok; ++b)
    if ((s >> b & 1) && !(fam >> (s ^ (1 << b)) & 1)) ok = false;
  if (ok) enumerate_families_rec(n, order, pos + 1, fam | (1ull << s), out);
}

std::vector<std::uint64_t> enumerate_families(int n) {
  std::vector<int> order;
  for (int c = 0; c <= n; ++c)
    for (int s = 0; s < (1 << n); ++s)
      if (std::popcount(static_cast<unsigned>(s)) == c) order.push_back(s);
  std::vector<std::uint64_t> out;
  enumerate_families_rec(n, order, 0, 0, out);
  return out;
}

FVector to_fvector(const std::vector<long long>& v) {
  FVector f;
  for (long long x : v) f.entries.emplace_back(x);
  return f;
}

}  // namespace

TEST_CASE("binom matches Pascal oracle and handles edge arguments") {
  auto rows = pascal_rows(40);
  for (int n = 0; n <= 40; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binom(n, k) == rows[n][k]);

  CHECK(binom(7, 5) == 21);
  CHECK(binom(13, 3) == 286);
  for (int n : {0, 1, 5, 17, 200}) CHECK(binom(n, 0) == 1);

  CHECK(binom(5, -1) == 0);
  CHECK(binom(5, 6) == 0);
  CHECK(binom(-1, 0) == 0);
}

TEST_CASE("binom agrees across the memoization cap") {
  auto rows = pascal_rows(140);
  for (int n = 120; n <= 140; ++n)
    for (int k : {0, 1, 2, 37, n / 2, n - 1, n}) CHECK(binom(n, k) == rows[n][k]);
  CHECK(hilb::binom_big(BigInt(130), 2) == 130 * 129 / 2);
  CHECK(hilb::binom_big(BigInt("10000000000000000000"), 1) ==
        BigInt("10000000000000000000"));
}

TEST_CASE("magic identity closed form equals the alternating sum") {
  for (long long n = 0; n <= 30; ++n)
    for (long long q = 0; q <= n; ++q)
      for (long long k = 0; k <= q; ++k)
        CHECK(magic_identity_rhs(n, q, k) == magic_lhs(n, q, k));

  CHECK(magic_identity_rhs(13, 8, 3) == 35);
  CHECK(magic_identity_rhs(6, 5, 2) == 1);
  for (long long q = 0; q <= 9; ++q) CHECK(magic_identity_rhs(9, q, 0) == 1);

  CHECK_THROWS_AS(magic_identity_rhs(5, 6, 2), std::domain_error);
  CHECK_THROWS_AS(magic_identity_rhs(5, 3, 4), std::domain_error);
  CHECK_THROWS_AS(magic_identity_rhs(5, 3, -1), std::domain_error);
}

TEST_CASE("kk_expand reproduces the paper's 118 expansion") {
  auto e = kk_expand(118, 3);
  REQUIRE(e.terms.size() == 3);
  CHECK(e.terms[0].top == 9);
  CHECK(e.terms[0].bottom == 3);
  CHECK(e.terms[1].top == 8);
  CHECK(e.terms[1].bottom == 2);
  CHECK(e.terms[2].top == 6);
  CHECK(e.terms[2].bottom == 1);

  auto g = kk_expand(30, 2);
  REQUIRE(g.terms.size() == 2);
  CHECK(g.terms[0].top == 8);
  CHECK(g.terms[1].top == 2);

  for (long long k = 1; k <= 9; ++k) {
    auto one = kk_expand(1, k);
    REQUIRE(one.terms.size() == 1);
    CHECK(one.terms[0].top == k);
    CHECK(one.terms[0].bottom == k);
  }

  CHECK_THROWS_AS(kk_expand(0, 3), std::domain_error);
  CHECK_THROWS_AS(kk_expand(5, 0), std::domain_error);
}

TEST_CASE("kk_expand invariants over 1 <= ell <= 10^4, k <= 8") {
  for (long long k = 1; k <= 8; ++k) {
    for (long long ell = 1; ell <= 10000; ++ell) {
      auto e = kk_expand(ell, k);
      REQUIRE(!e.terms.empty());
      CHECK(e.value() == ell);
      CHECK(e.terms[0].bottom == k);
      for (std::size_t i = 0; i < e.terms.size(); ++i) {
        const auto& t = e.terms[i];
        CHECK(t.bottom == k - static_cast<long long>(i));
        CHECK(t.top >= t.bottom);
        CHECK(t.bottom >= 1);
        if (i > 0) CHECK(t.top < e.terms[i - 1].top);
      }
      // uniqueness: re-expanding the reconstructed sum is the identity
      if (ell % 997 == 0) CHECK(kk_expand(e.value(), k).terms == e.terms);
    }
  }
}

TEST_CASE("kk_upper values and properties") {
  CHECK(kk_upper(120, 3) == 210);
  CHECK(kk_upper(118, 3) == 197);
  for (long long k = 1; k <= 6; ++k) CHECK(kk_upper(0, k) == 0);
  CHECK(kk_upper(1, 1) == 0);  // one vertex supports no edge

  for (long long k = 2; k <= 11; ++k)
    for (long long m = k + 1; m <= 12; ++m)
      CHECK(kk_upper(binom(m, k), k) == binom(m, k + 1));

  // monotone in ell (the search pruning relies on this)
  for (long long k = 1; k <= 5; ++k) {
    BigInt prev = 0;
    for (long long ell = 1; ell <= 2000; ++ell) {
      BigInt cur = kk_upper(ell, k);
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("shadow_lower_bound values, monotonicity, duality with kk_upper") {
  CHECK(shadow_lower_bound(118, 3) == 45);
  for (long long m = 2; m <= 14; ++m) CHECK(shadow_lower_bound(binom(m, 2), 2) == m);
  {
    long long n = 9;  // alpha_4 = C(n-1,4) + C(3,3)
    CHECK(shadow_lower_bound(binom(n - 1, 4) + 1, 4) == binom(n - 1, 3) + 3);
  }

  for (long long k = 2; k <= 5; ++k) {
    BigInt prev = 0;
    for (long long a = 1; a <= 2000; ++a) {
      BigInt cur = shadow_lower_bound(a, k);
      CHECK(cur >= prev);
      prev = cur;
    }
  }

  // m <= ell^(k)  iff  the m (k+1)-sets' shadow fits in ell k-sets
  for (long long k = 1; k <= 4; ++k) {
    for (long long ell = 1; ell <= 300; ++ell) {
      BigInt up = kk_upper(ell, k);
      for (BigInt m = 1; m <= up + 5; ++m)
        CHECK((m <= up) == (shadow_lower_bound(m, k + 1) <= ell));
    }
  }

  CHECK_THROWS_AS(shadow_lower_bound(3, 1), std::domain_error);
  CHECK_THROWS_AS(shadow_lower_bound(0, 3), std::domain_error);
}

TEST_CASE("fvector_feasible agrees with the exhaustive complex census") {
  // validate the DFS enumerator against brute force at small n
  for (int n = 0; n <= 4; ++n) {
    std::set<std::uint64_t> brute;
    for (std::uint64_t fam = 0; fam < (1ull << (1 << n)); ++fam)
      if (downward_closed(fam, n)) brute.insert(fam);
    auto dfs = enumerate_families(n);
    CHECK(brute.size() == dfs.size());
    CHECK(std::set<std::uint64_t>(dfs.begin(), dfs.end()) == brute);
  }

  auto families = enumerate_families(5);
  CHECK(families.size() == 7581);  // Dedekind count of antichains on 5 elements

  std::set<std::vector<long long>> census;
  for (std::uint64_t fam : families)
    if (fam != 0) census.insert(f_vector_of(fam, 5));  // skip the void family

  // every candidate with positive entries and f_0 <= 5
  std::vector<long long> caps = {5, 10, 10, 5, 1};
  std::vector<std::vector<long long>> stack = {{1}};
  long long checked = 0;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    auto res = fvector_feasible(to_fvector(v));
    CHECK(res.feasible == (census.count(v) > 0));
    ++checked;
    if (v.size() <= caps.size()) {
      for (long long x = 1; x <= caps[v.size() - 1]; ++x) {
        auto w = v;
        w.push_back(x);
        stack.push_back(w);
      }
    }
  }
  CHECK(checked > 5000);
}

TEST_CASE("fvector_feasible edge handling") {
  CHECK(fvector_feasible(to_fvector({1})).feasible);
  for (long long n : {1, 2, 7, 100}) CHECK(fvector_feasible(to_fvector({1, n})).feasible);

  auto bad = fvector_feasible(to_fvector({1, 3, 4}));
  CHECK(!bad.feasible);
  CHECK(bad.violated_index == 1);

  auto trunc = fvector_feasible(to_fvector({1, 3, 3, 0, 0}));
  CHECK(trunc.feasible);
  CHECK(trunc.truncated_at == 2);

  auto interior = fvector_feasible(to_fvector({1, 0, 3}));
  CHECK(!interior.feasible);
  CHECK(interior.violated_index == 1);

  // the minus3 alpha vector read as an f-vector
  CHECK(fvector_feasible(to_fvector({1, 10, 45, 120, 197, 216, 155, 70})).feasible);

  CHECK_THROWS_AS(fvector_feasible(to_fvector({2, 1})), std::domain_error);
  CHECK_THROWS_AS(fvector_feasible(FVector{}), std::domain_error);
}
