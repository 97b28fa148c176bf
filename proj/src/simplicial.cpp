#include <hilb/combinatorics.hpp>
#include <hilb/simplicial.hpp>

#include <stdexcept>

namespace hilb {

BigInt colex_rank(SubsetMask a) {
  BigInt rank = 0;
  int t = 0;
  while (a) {
    int b = std::countr_zero(a);
    rank += binom(b, t + 1);
    a &= a - 1;
    ++t;
  }
  return rank;
}

SubsetMask colex_unrank(int k, const BigInt& rank) {
  if (k < 0 || rank < 0) throw std::domain_error("colex_unrank: bad arguments");
  BigInt rest = rank;
  SubsetMask mask = 0;
  for (int t = k; t >= 1; --t) {
    // largest b with C(b, t) <= rest
    int b = t - 1;
    while (binom(b + 1, t) <= rest) ++b;
    if (b >= 64) throw std::domain_error("colex_unrank: rank out of word range");
    mask |= SubsetMask(1) << b;
    rest -= binom(b, t);
  }
  if (rest != 0) throw std::logic_error("colex_unrank: residual rank");
  return mask;
}

SquarefreeIdeal stanley_reisner_of_colex(const std::vector<BigInt>& face_counts,
                                         int n) {
  if (n < 1 || n > 30)
    throw std::domain_error("stanley_reisner_of_colex: need 1 <= n <= 30");
  if (face_counts.size() != static_cast<std::size_t>(n) + 1 ||
      face_counts[0] != 1)
    throw std::domain_error("stanley_reisner_of_colex: counts must start at 1");
  for (int c = 0; c <= n; ++c)
    if (face_counts[c] < 0 || face_counts[c] > binom(n, c))
      throw std::domain_error("stanley_reisner_of_colex: count out of range");

  const std::size_t size = std::size_t(1) << n;
  std::vector<std::uint8_t> face(size, 0);
  for (std::size_t mask = 0; mask < size; ++mask) {
    int c = subset_card(SubsetMask(mask));
    face[mask] = colex_rank(SubsetMask(mask)) < face_counts[c] ? 1 : 0;
  }

  std::vector<SubsetMask> gens;
  for (std::size_t mask = 0; mask < size; ++mask) {
    if (face[mask]) continue;
    bool minimal = true;
    SubsetMask rest = SubsetMask(mask);
    while (rest && minimal) {
      SubsetMask bit = rest & (SubsetMask(0) - rest);  // lowest set bit
      if (!face[mask ^ bit]) minimal = false;
      rest ^= bit;
    }
    if (minimal) gens.push_back(SubsetMask(mask));
  }
  return minimalize_squarefree(gens, n);
}

ComplexCensus::ComplexCensus(int n_) : n(n_) {
  if (n < 1 || n > kMaxCensusVars)
    throw std::domain_error("ComplexCensus: need 1 <= n <= 6");
  for (int c = 0; c <= n; ++c)
    for (int s = 0; s < (1 << n); ++s)
      if (subset_card(static_cast<SubsetMask>(s)) == c) order.push_back(s);
  covers.assign(std::size_t(1) << n, 0);
  for (int s = 0; s < (1 << n); ++s)
    for (int b = 0; b < n; ++b)
      if (s >> b & 1) covers[s] |= std::uint64_t(1) << (s ^ (1 << b));
}

std::vector<ComplexCensus::State> ComplexCensus::split(int split_card) const {
  std::size_t split_pos = 0;
  while (split_pos < order.size() &&
         subset_card(static_cast<SubsetMask>(order[split_pos])) <= split_card)
    ++split_pos;

  std::vector<State> states;
  State state;
  // DFS over the first split_pos positions only
  auto rec = [&](auto&& self, State& st) -> void {
    if (st.pos == split_pos) {
      states.push_back(st);
      return;
    }
    int s = order[st.pos];
    ++st.pos;
    self(self, st);
    if ((st.family & covers[s]) == covers[s]) {
      st.family |= std::uint64_t(1) << s;
      ++st.counts[subset_card(static_cast<SubsetMask>(s))];
      self(self, st);
      --st.counts[subset_card(static_cast<SubsetMask>(s))];
      st.family &= ~(std::uint64_t(1) << s);
    }
    --st.pos;
  };
  rec(rec, state);
  return states;
}

std::vector<SubsetMask> ComplexCensus::minimal_nonfaces(
    std::uint64_t family) const {
  std::vector<SubsetMask> gens;
  for (int s = 0; s < (1 << n); ++s) {
    if (family >> s & 1) continue;
    if ((family & covers[s]) == covers[s]) gens.push_back(SubsetMask(s));
  }
  return gens;
}

}  // namespace hilb
