#ifndef HILB_IDEALS_HPP
#define HILB_IDEALS_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hilb {

// Single-word subset masks cap the ambient size.
inline constexpr int kMaxVars = 63;

/// A subset of [n] as a bitmask; variable i (1-based) is bit i-1.
using SubsetMask = std::uint64_t;

inline int subset_card(SubsetMask a) { return std::popcount(a); }
inline bool subset_subseteq(SubsetMask a, SubsetMask b) { return (a & ~b) == 0; }
inline SubsetMask full_mask(int n) {
  return n == 64 ? ~SubsetMask(0) : (SubsetMask(1) << n) - 1;
}

/// Monomial as an exponent vector over n ambient variables.
struct Monomial {
  std::vector<int> exponents;

  int vars() const { return static_cast<int>(exponents.size()); }
  long long degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;
};

/// x_A for a subset mask (squarefree by construction).
Monomial monomial_from_mask(SubsetMask a, int n);

/// Mask of a squarefree monomial; domain error when an exponent exceeds 1.
SubsetMask mask_from_monomial(const Monomial& m);

/// Monomial ideal with divisibility-minimal generators, sorted
/// canonically (degree, then exponent vector lexicographically).
struct MonomialIdeal {
  int n = 0;
  std::vector<Monomial> generators;  // minimal, canonical order

  bool is_zero() const { return generators.empty(); }
  bool is_unit() const;
  bool is_proper() const { return !is_unit(); }
  bool is_squarefree() const;
  bool contains(const Monomial& m) const;

  bool operator==(const MonomialIdeal&) const = default;
};

/// Builds the ideal generated by `gens`, dropping non-minimal
/// generators. Domain error on mixed ambient sizes.
MonomialIdeal minimalize(const std::vector<Monomial>& gens, int n);

/// Intersection: generated by pairwise lcms, then minimalized.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// Sum: union of generators, minimalized.
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// Squarefree ideal over n <= 63 variables; generators as subset masks,
/// minimal under inclusion, sorted ascending.
struct SquarefreeIdeal {
  int n = 0;
  std::vector<SubsetMask> gens;

  bool is_zero() const { return gens.empty(); }
  bool is_unit() const { return !gens.empty() && gens.front() == 0; }
  bool is_proper() const { return !is_unit(); }
  bool contains(SubsetMask a) const;
  bool contains_ideal(const SquarefreeIdeal& other) const;
  bool is_principal() const { return gens.size() == 1; }
  bool in_m_squared() const;

  MonomialIdeal to_monomial_ideal() const;

  bool operator==(const SquarefreeIdeal&) const = default;
};

SquarefreeIdeal minimalize_squarefree(const std::vector<SubsetMask>& gens, int n);
SquarefreeIdeal squarefree_from_monomial_ideal(const MonomialIdeal& ideal);
SquarefreeIdeal intersect(const SquarefreeIdeal& a, const SquarefreeIdeal& b);
SquarefreeIdeal sum(const SquarefreeIdeal& a, const SquarefreeIdeal& b);

bool is_principal(const MonomialIdeal& ideal);

/// True iff every minimal generator has degree >= 2 (I inside m^2).
bool in_m_squared(const MonomialIdeal& ideal);

struct Polarization {
  SquarefreeIdeal ideal;  // over n + extra_vars variables
  long long extra_vars = 0;
  // origin[v] = (original 1-based variable, exponent slot >= 1) for each
  // 1-based variable v of the polarized ring.
  std::vector<std::pair<int, int>> origin;
};

/// Standard polarization: each x_i^e factor becomes x_{i,1}...x_{i,e} in
/// fresh variables appended after the originals, grouped by original
/// variable, then by slot. A squarefree input comes back unchanged with
/// extra_vars = 0. Domain error for the zero or unit ideal, or when the
/// polarized ring would exceed 63 variables.
Polarization polarize(const MonomialIdeal& ideal);

// ---- text format -------------------------------------------------------
//
// Generators are comma-separated products of x<i> factors with optional
// ^e exponents and optional * separators, e.g. "x1*x2, x1x5x6, x3^2*x4".
// Indices are always read greedily: x12 is variable 12. A bare `...`
// between two single-variable generators expands the run, so
// "(x2,...,x13)" means x2, x3, ..., x13. Surrounding parentheses are
// allowed. Throws std::invalid_argument on malformed input.

/// Parses a generator list. If n == 0 the ambient size is inferred as the
/// largest variable index used.
MonomialIdeal parse_ideal(const std::string& text, int n = 0);

std::string format_monomial(const Monomial& m);
std::string format_ideal(const MonomialIdeal& ideal);
std::string format_subset_monomial(SubsetMask a);
std::string format_ideal(const SquarefreeIdeal& ideal);

}  // namespace hilb

#endif
