#include <hilb/ideals.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace hilb {

long long Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0ll);
}

bool Monomial::is_one() const {
  return std::all_of(exponents.begin(), exponents.end(),
                     [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents.begin(), exponents.end(),
                     [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    out.exponents[i] = std::max(exponents[i], other.exponents[i]);
  return out;
}

Monomial monomial_from_mask(SubsetMask a, int n) {
  Monomial m;
  m.exponents.assign(n, 0);
  for (int i = 0; i < n; ++i)
    if (a >> i & 1) m.exponents[i] = 1;
  return m;
}

SubsetMask mask_from_monomial(const Monomial& m) {
  if (!m.is_squarefree())
    throw std::domain_error("mask_from_monomial: monomial is not squarefree");
  if (m.vars() > kMaxVars)
    throw std::domain_error("mask_from_monomial: more than 63 variables");
  SubsetMask a = 0;
  for (int i = 0; i < m.vars(); ++i)
    if (m.exponents[i] == 1) a |= SubsetMask(1) << i;
  return a;
}

bool MonomialIdeal::is_unit() const {
  return generators.size() == 1 && generators.front().is_one();
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(generators.begin(), generators.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators.begin(), generators.end(),
                     [&m](const Monomial& g) { return g.divides(m); });
}

namespace {

bool monomial_less(const Monomial& a, const Monomial& b) {
  long long da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents < b.exponents;
}

}  // namespace

MonomialIdeal minimalize(const std::vector<Monomial>& gens, int n) {
  for (const auto& g : gens)
    if (g.vars() != n)
      throw std::domain_error("minimalize: generator has wrong ambient size");

  MonomialIdeal ideal;
  ideal.n = n;
  std::vector<Monomial> sorted = gens;
  std::sort(sorted.begin(), sorted.end(), monomial_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& g : sorted) {
    bool redundant =
        std::any_of(ideal.generators.begin(), ideal.generators.end(),
                    [&g](const Monomial& kept) { return kept.divides(g); });
    if (!redundant) ideal.generators.push_back(g);
  }
  return ideal;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n != b.n)
    throw std::domain_error("intersect: mixed ambient sizes");
  std::vector<Monomial> lcms;
  lcms.reserve(a.generators.size() * b.generators.size());
  for (const auto& u : a.generators)
    for (const auto& v : b.generators) lcms.push_back(u.lcm(v));
  return minimalize(lcms, a.n);
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n != b.n)
    throw std::domain_error("sum: mixed ambient sizes");
  std::vector<Monomial> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  return minimalize(gens, a.n);
}

bool SquarefreeIdeal::contains(SubsetMask a) const {
  return std::any_of(gens.begin(), gens.end(),
                     [a](SubsetMask g) { return subset_subseteq(g, a); });
}

bool SquarefreeIdeal::contains_ideal(const SquarefreeIdeal& other) const {
  return std::all_of(other.gens.begin(), other.gens.end(),
                     [this](SubsetMask g) { return contains(g); });
}

bool SquarefreeIdeal::in_m_squared() const {
  return std::all_of(gens.begin(), gens.end(),
                     [](SubsetMask g) { return subset_card(g) >= 2; });
}

MonomialIdeal SquarefreeIdeal::to_monomial_ideal() const {
  std::vector<Monomial> ms;
  ms.reserve(gens.size());
  for (SubsetMask g : gens) ms.push_back(monomial_from_mask(g, n));
  return minimalize(ms, n);
}

SquarefreeIdeal minimalize_squarefree(const std::vector<SubsetMask>& gens, int n) {
  if (n < 0 || n > kMaxVars)
    throw std::domain_error("minimalize_squarefree: need 0 <= n <= 63");
  SquarefreeIdeal ideal;
  ideal.n = n;
  std::vector<SubsetMask> sorted = gens;
  for (SubsetMask g : sorted)
    if (!subset_subseteq(g, full_mask(n)))
      throw std::domain_error("minimalize_squarefree: generator outside [n]");
  std::sort(sorted.begin(), sorted.end(), [](SubsetMask a, SubsetMask b) {
    int ca = subset_card(a), cb = subset_card(b);
    return ca != cb ? ca < cb : a < b;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (SubsetMask g : sorted)
    if (!ideal.contains(g)) ideal.gens.push_back(g);
  std::sort(ideal.gens.begin(), ideal.gens.end());
  return ideal;
}

SquarefreeIdeal squarefree_from_monomial_ideal(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree())
    throw std::domain_error(
        "squarefree_from_monomial_ideal: ideal has a non-squarefree generator");
  std::vector<SubsetMask> gens;
  gens.reserve(ideal.generators.size());
  for (const auto& g : ideal.generators) gens.push_back(mask_from_monomial(g));
  return minimalize_squarefree(gens, ideal.n);
}

SquarefreeIdeal intersect(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
  if (a.n != b.n)
    throw std::domain_error("intersect: mixed ambient sizes");
  std::vector<SubsetMask> lcms;
  lcms.reserve(a.gens.size() * b.gens.size());
  for (SubsetMask u : a.gens)
    for (SubsetMask v : b.gens) lcms.push_back(u | v);
  return minimalize_squarefree(lcms, a.n);
}

SquarefreeIdeal sum(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
  if (a.n != b.n)
    throw std::domain_error("sum: mixed ambient sizes");
  std::vector<SubsetMask> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return minimalize_squarefree(gens, a.n);
}

bool is_principal(const MonomialIdeal& ideal) {
  return ideal.generators.size() == 1;
}

bool in_m_squared(const MonomialIdeal& ideal) {
  return std::all_of(ideal.generators.begin(), ideal.generators.end(),
                     [](const Monomial& g) { return g.degree() >= 2; });
}

Polarization polarize(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::domain_error("polarize: zero ideal");
  if (ideal.is_unit()) throw std::domain_error("polarize: unit ideal");

  int n = ideal.n;
  std::vector<int> max_exp(n, 1);
  for (const auto& g : ideal.generators)
    for (int i = 0; i < n; ++i) max_exp[i] = std::max(max_exp[i], g.exponents[i]);

  long long extra = 0;
  for (int i = 0; i < n; ++i) extra += max_exp[i] - 1;
  if (n + extra > kMaxVars)
    throw std::domain_error("polarize: polarized ring exceeds 63 variables");
  int big_n = n + static_cast<int>(extra);

  Polarization out;
  out.extra_vars = extra;
  out.origin.reserve(big_n);
  for (int i = 0; i < n; ++i) out.origin.emplace_back(i + 1, 1);
  // slot s >= 2 of variable i lives at slot_var[i][s-2]
  std::vector<std::vector<int>> slot_var(n);
  int next = n;
  for (int i = 0; i < n; ++i)
    for (int s = 2; s <= max_exp[i]; ++s) {
      slot_var[i].push_back(next++);
      out.origin.emplace_back(i + 1, s);
    }

  std::vector<SubsetMask> gens;
  gens.reserve(ideal.generators.size());
  for (const auto& g : ideal.generators) {
    SubsetMask mask = 0;
    for (int i = 0; i < n; ++i) {
      if (g.exponents[i] == 0) continue;
      mask |= SubsetMask(1) << i;
      for (int s = 2; s <= g.exponents[i]; ++s)
        mask |= SubsetMask(1) << slot_var[i][s - 2];
    }
    gens.push_back(mask);
  }
  out.ideal = minimalize_squarefree(gens, big_n);
  if (out.ideal.gens.size() != ideal.generators.size())
    throw std::logic_error("polarize: generator count changed");
  return out;
}

// ---- parsing and formatting ---------------------------------------------

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool done() {
    skip_ws();
    return pos == text.size();
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start)
      throw std::invalid_argument("ideal parse: expected a number at position " +
                                  std::to_string(start));
    return std::stoll(text.substr(start, pos - start));
  }

  // x<i>(^e)? factors with optional '*' separators
  std::vector<std::pair<int, int>> factors() {
    std::vector<std::pair<int, int>> out;
    while (true) {
      skip_ws();
      if (pos >= text.size() || (text[pos] != 'x' && text[pos] != 'X')) break;
      ++pos;
      long long idx = integer();
      if (idx < 1 || idx > kMaxVars)
        throw std::invalid_argument("ideal parse: variable index " +
                                    std::to_string(idx) + " out of range 1..63");
      long long exp = 1;
      if (eat('^')) {
        exp = integer();
        if (exp < 1)
          throw std::invalid_argument("ideal parse: exponent must be positive");
      }
      out.emplace_back(static_cast<int>(idx), static_cast<int>(exp));
      eat('*');
    }
    if (out.empty())
      throw std::invalid_argument("ideal parse: expected a monomial at position " +
                                  std::to_string(pos));
    return out;
  }
};

}  // namespace

MonomialIdeal parse_ideal(const std::string& text, int n) {
  Parser p(text);
  bool parenthesized = p.eat('(');

  // factor lists per generator; a run marker for `...`
  struct RawGen {
    bool ellipsis = false;
    std::vector<std::pair<int, int>> factors;
  };
  std::vector<RawGen> raw;
  if (!p.done() && !p.peek(')')) {
    while (true) {
      p.skip_ws();
      RawGen g;
      if (text.compare(p.pos, 3, "...") == 0) {
        g.ellipsis = true;
        p.pos += 3;
      } else {
        g.factors = p.factors();
      }
      raw.push_back(std::move(g));
      if (!p.eat(',')) break;
    }
  }
  if (parenthesized && !p.eat(')'))
    throw std::invalid_argument("ideal parse: missing closing parenthesis");
  if (!p.done())
    throw std::invalid_argument("ideal parse: trailing input at position " +
                                std::to_string(p.pos));

  // expand  xA, ..., xB  runs
  std::vector<std::vector<std::pair<int, int>>> gens;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!raw[i].ellipsis) {
      gens.push_back(raw[i].factors);
      continue;
    }
    bool ok = i > 0 && i + 1 < raw.size() && !raw[i - 1].ellipsis &&
              !raw[i + 1].ellipsis && raw[i - 1].factors.size() == 1 &&
              raw[i + 1].factors.size() == 1 &&
              raw[i - 1].factors[0].second == 1 &&
              raw[i + 1].factors[0].second == 1 &&
              raw[i - 1].factors[0].first < raw[i + 1].factors[0].first;
    if (!ok)
      throw std::invalid_argument(
          "ideal parse: '...' must sit between single variables xA, xB with A < B");
    for (int v = raw[i - 1].factors[0].first + 1; v < raw[i + 1].factors[0].first;
         ++v)
      gens.push_back({{v, 1}});
  }

  int max_var = 0;
  for (const auto& g : gens)
    for (auto [v, e] : g) max_var = std::max(max_var, v);
  if (n == 0) n = max_var;
  if (n < max_var)
    throw std::invalid_argument("ideal parse: variable index exceeds ambient n=" +
                                std::to_string(n));
  if (n < 1 || n > kMaxVars)
    throw std::invalid_argument("ideal parse: ambient size must be in 1..63");

  std::vector<Monomial> monomials;
  monomials.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial m;
    m.exponents.assign(n, 0);
    for (auto [v, e] : g) m.exponents[v - 1] += e;
    monomials.push_back(std::move(m));
  }
  return minimalize(monomials, n);
}

std::string format_monomial(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 0; i < m.vars(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (m.exponents[i] > 1) out += "^" + std::to_string(m.exponents[i]);
  }
  return out;
}

std::string format_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
    if (i) out += ", ";
    out += format_monomial(ideal.generators[i]);
  }
  return out + ")";
}

std::string format_subset_monomial(SubsetMask a) {
  if (a == 0) return "1";
  std::string out;
  for (int i = 0; i < 64; ++i) {
    if (!(a >> i & 1)) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
  }
  return out;
}

std::string format_ideal(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::vector<SubsetMask> sorted = ideal.gens;
  std::sort(sorted.begin(), sorted.end(), [](SubsetMask x, SubsetMask y) {
    int cx = subset_card(x), cy = subset_card(y);
    return cx != cy ? cx < cy : x < y;
  });
  std::string out = "(";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += ", ";
    out += format_subset_monomial(sorted[i]);
  }
  return out + ")";
}

}  // namespace hilb
