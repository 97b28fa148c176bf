#ifndef HILB_SIMPLICIAL_HPP
#define HILB_SIMPLICIAL_HPP

#include <hilb/bigint.hpp>
#include <hilb/ideals.hpp>

#include <array>
#include <cstdint>
#include <vector>

namespace hilb {

/// Rank of a k-subset mask among all k-subset masks in colexicographic
/// order (equivalently numeric order of masks): the combinatorial number
/// system value sum_t C(b_t, t+1) over ascending bit positions b_t.
BigInt colex_rank(SubsetMask a);

/// Inverse: the rank-th k-subset mask in colex order.
SubsetMask colex_unrank(int k, const BigInt& rank);

/// Stanley-Reisner ideal of the face family "mask A of size c is a face
/// iff colex_rank(A) < face_counts[c]": generated by the minimal
/// non-faces. face_counts[0] must be 1 and the counts must describe a
/// downward-closed family (callers establish this via Kruskal-Katona
/// feasibility). n is gated like alpha enumeration.
SquarefreeIdeal stanley_reisner_of_colex(const std::vector<BigInt>& face_counts,
                                         int n);

// ---- exhaustive census of simplicial complexes on [n], n <= 6 ----------
//
// A family of subsets of [n] is a bitmask over the 2^n subset indices.
// The census walks every downward-closed family except the void one
// (so every proper squarefree ideal appears, with the zero ideal as the
// full family).

inline constexpr int kMaxCensusVars = 6;

struct ComplexCensus {
  int n;
  std::vector<int> order;            // subset indices by (cardinality, value)
  std::vector<std::uint64_t> covers; // covers[s]: family-bits of s's covers

  explicit ComplexCensus(int n);

  struct State {
    std::size_t pos = 0;
    std::uint64_t family = 0;
    std::array<int, kMaxCensusVars + 1> counts{};  // faces per cardinality
  };

  /// Visits every downward-closed family extending `from` (decides
  /// positions from `from.pos` on). The visitor receives a State whose
  /// counts are the family's face counts per cardinality. The void
  /// family is visited too when reachable; callers skip it as needed.
  template <class Visitor>
  void run(const State& from, Visitor&& visit) const {
    State state = from;
    run_rec(state, visit);
  }

  template <class Visitor>
  void for_each(Visitor&& visit) const {
    run(State{}, visit);
  }

  /// All partial states with positions of cardinality <= split_card
  /// decided, in DFS order; feeding each to run() partitions the census.
  std::vector<State> split(int split_card) const;

  /// Minimal non-faces of a family: the Stanley-Reisner generators.
  std::vector<SubsetMask> minimal_nonfaces(std::uint64_t family) const;

 private:
  template <class Visitor>
  void run_rec(State& state, Visitor& visit) const {
    if (state.pos == order.size()) {
      visit(const_cast<const State&>(state));
      return;
    }
    int s = order[state.pos];
    ++state.pos;
    run_rec(state, visit);  // exclude s
    if ((state.family & covers[s]) == covers[s]) {
      state.family |= std::uint64_t(1) << s;
      ++state.counts[subset_card(static_cast<SubsetMask>(s))];
      run_rec(state, visit);
      --state.counts[subset_card(static_cast<SubsetMask>(s))];
      state.family &= ~(std::uint64_t(1) << s);
    }
    --state.pos;
  }
};

}  // namespace hilb

#endif
