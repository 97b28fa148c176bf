#ifndef HILB_RANDOM_HPP
#define HILB_RANDOM_HPP

#include <hilb/ideals.hpp>

#include <cstdint>
#include <random>

namespace hilb {

/// Deterministic RNG: mt19937_64 output is pinned by the standard, and
/// the bound reduction below avoids std::uniform_int_distribution, whose
/// stream is implementation-defined. Same seed, same draws, everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish value in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  /// Uniform-ish value in [lo, hi], inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

/// Random subset of [n] with exactly `card` elements.
inline SubsetMask random_mask_of_card(Rng& rng, int n, int card) {
  SubsetMask mask = 0;
  // Floyd's sampling
  for (int j = n - card; j < n; ++j) {
    int t = static_cast<int>(rng.range(0, j));
    SubsetMask bit = SubsetMask(1) << t;
    if (mask & bit) bit = SubsetMask(1) << j;
    mask |= bit;
  }
  return mask;
}

/// Random proper nonzero squarefree ideal: `gens` generators with
/// degrees drawn from [deg_lo, deg_hi], minimalized.
inline SquarefreeIdeal random_squarefree_ideal(Rng& rng, int n, int max_gens,
                                               int deg_lo = 1, int deg_hi = 0) {
  if (deg_hi == 0) deg_hi = n;
  int count = static_cast<int>(rng.range(1, max_gens));
  std::vector<SubsetMask> gens;
  gens.reserve(count);
  for (int i = 0; i < count; ++i) {
    int d = static_cast<int>(rng.range(deg_lo, deg_hi));
    gens.push_back(random_mask_of_card(rng, n, d));
  }
  return minimalize_squarefree(gens, n);
}

/// Random proper nonzero monomial ideal with bounded exponents; at least
/// one generator gets an exponent >= 2 when force_nonsquarefree is set.
inline MonomialIdeal random_monomial_ideal(Rng& rng, int n, int max_gens,
                                           int max_exp,
                                           bool force_nonsquarefree = false) {
  while (true) {
    int count = static_cast<int>(rng.range(1, max_gens));
    std::vector<Monomial> gens;
    for (int i = 0; i < count; ++i) {
      Monomial m;
      m.exponents.assign(n, 0);
      for (int v = 0; v < n; ++v)
        m.exponents[v] = static_cast<int>(rng.range(0, max_exp));
      if (m.is_one()) m.exponents[static_cast<int>(rng.range(0, n - 1))] = 1;
      gens.push_back(std::move(m));
    }
    MonomialIdeal ideal = minimalize(gens, n);
    if (force_nonsquarefree && ideal.is_squarefree()) continue;
    return ideal;
  }
}

}  // namespace hilb

#endif
