#include <hilb/combinatorics.hpp>
#include <hilb/parallel.hpp>
#include <hilb/random.hpp>
#include <hilb/search.hpp>
#include <hilb/simplicial.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hilb {

namespace {

using Clock = std::chrono::steady_clock;

BigInt chain_hi(int n, const BigInt& prev, int j) {
  // upper bound for alpha_j given alpha_{j-1} = prev
  if (j == 1) return n;
  if (prev == 0) return 0;
  BigInt by_kk = kk_upper(prev, j - 1);
  BigInt by_level = binom(n, j);
  return by_kk < by_level ? by_kk : by_level;
}

AlphaVector padded(int n, const std::vector<BigInt>& prefix) {
  AlphaVector alpha;
  alpha.n = n;
  alpha.counts = prefix;
  alpha.counts.resize(n + 1, BigInt(0));
  return alpha;
}

}  // namespace

void enumerate_feasible_alpha(int n, const AlphaConstraints& constraints,
                              const std::function<void(const AlphaVector&)>& yield,
                              int cap) {
  if (n < 1 || n > kMaxVars)
    throw std::domain_error("enumerate_feasible_alpha: need 1 <= n <= 63");
  if (n > cap)
    throw std::domain_error("enumerate_feasible_alpha: n = " + std::to_string(n) +
                            " exceeds the sweep cap " + std::to_string(cap) +
                            " (raise it explicitly to override)");
  std::vector<BigInt> prefix = {1};
  if (!constraints.admits(0, prefix[0]))
    throw std::domain_error("enumerate_feasible_alpha: alpha_0 is pinned away from 1");

  auto zeros_admitted = [&](std::size_t from) {
    for (std::size_t j = from; j <= static_cast<std::size_t>(n); ++j)
      if (!constraints.admits(j, 0)) return false;
    return true;
  };

  auto rec = [&](auto&& self) -> void {
    std::size_t i = prefix.size() - 1;
    if (i == static_cast<std::size_t>(n)) {
      yield(padded(n, prefix));
      return;
    }
    // terminate the chain here (trailing zeros)
    if (zeros_admitted(i + 1)) yield(padded(n, prefix));
    for (BigInt a = chain_hi(n, prefix[i], static_cast<int>(i) + 1); a >= 1; --a) {
      if (!constraints.admits(i + 1, a)) continue;
      prefix.push_back(a);
      self(self);
      prefix.pop_back();
    }
  };
  rec(rec);
}

std::vector<AlphaVector> collect_feasible_alpha(int n,
                                                const AlphaConstraints& constraints,
                                                int cap) {
  std::vector<AlphaVector> out;
  enumerate_feasible_alpha(
      n, constraints, [&out](const AlphaVector& a) { out.push_back(a); }, cap);
  return out;
}

SquarefreeIdeal realize_colex(const AlphaVector& alpha, int subset_limit) {
  if (alpha.counts.size() != static_cast<std::size_t>(alpha.n) + 1)
    throw std::domain_error("realize_colex: alpha has wrong length");
  FVector f;
  f.entries = alpha.counts;
  auto feas = fvector_feasible(f);
  if (!feas.feasible)
    throw std::domain_error("realize_colex: alpha is not Kruskal-Katona feasible");
  for (int j = 0; j <= alpha.n; ++j)
    if (alpha.counts[j] > binom(alpha.n, j))
      throw std::domain_error("realize_colex: alpha_j exceeds C(n, j)");
  // no count may sit above a zero level
  for (int j = 1; j <= alpha.n; ++j)
    if (alpha.counts[j] > 0 && alpha.counts[j - 1] == 0)
      throw std::domain_error("realize_colex: positive count above a zero level");

  SquarefreeIdeal ideal = stanley_reisner_of_colex(alpha.counts, alpha.n);
  if (!ideal.is_zero() && ideal.is_proper()) {
    AlphaVector check = alpha_of_quotient(ideal, subset_limit);
    if (check != alpha)
      throw std::logic_error("realize_colex: realization does not reproduce alpha");
  }
  return ideal;
}

// ---- hunt ------------------------------------------------------------------

namespace {

struct CandidateBounds {
  long long level = 0;                      // the beta level carrying violations
  std::vector<std::optional<BigInt>> bound; // bound[k], k = 0..level
};

CandidateBounds make_bounds(const SearchSpec& spec, long long q) {
  const int n = spec.n;
  CandidateBounds cb;
  switch (spec.predicate.kind) {
    case PredicateKind::hdepth_ideal_lt_quotient:
    case PredicateKind::at_least_fails: {
      cb.level = q;
      cb.bound.assign(q + 1, std::nullopt);
      for (long long k = 1; k <= q; ++k)
        if (!spec.predicate.k || *spec.predicate.k == k)
          cb.bound[k] = binom(n - q + k - 1, k);
      break;
    }
    case PredicateKind::strict_plus_one_fails: {
      cb.level = std::min<long long>(q + 1, n);
      cb.bound.assign(cb.level + 1, std::nullopt);
      for (long long kk = 1; kk <= cb.level; ++kk)
        if (!spec.predicate.k || *spec.predicate.k == kk)
          cb.bound[kk] = binom(n - q + kk - 2, kk);
      break;
    }
    case PredicateKind::custom_beta: {
      cb.level = q;
      cb.bound.assign(q + 1, std::nullopt);
      if (*spec.predicate.k < static_cast<long long>(cb.bound.size()))
        cb.bound[*spec.predicate.k] = *spec.predicate.bound;
      break;
    }
  }
  return cb;
}

// beta_k^L restricted to a fixed prefix alpha_0..alpha_m (terms j > m dropped)
BigInt beta_prefix_sum(const std::vector<BigInt>& prefix, long long L,
                       long long k, long long m) {
  BigInt sum = 0;
  for (long long j = 0; j <= m && j <= k; ++j) {
    BigInt term = binom(L - j, k - j) * prefix[static_cast<std::size_t>(j)];
    if ((k - j) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

struct TaskStats {
  long long nodes = 0;
  long long leaves = 0;
  long long pruned_infeasible = 0;
  long long pruned_no_violation = 0;
  bool exhausted = false;
};

class HuntTask {
 public:
  HuntTask(const SearchSpec& spec, long long q, long long budget,
           std::optional<Clock::time_point> deadline)
      : spec_(spec), n_(spec.n), q_(q), budget_(budget), deadline_(deadline),
        bounds_(make_bounds(spec, q)) {}

  void run(const BigInt& alpha1, std::vector<Finding>& findings,
           TaskStats& stats) {
    findings_ = &findings;
    stats_ = &stats;
    prefix_ = {1};
    if (!spec_.constraints.admits(0, prefix_[0])) return;
    if (!spec_.constraints.admits(1, alpha1)) return;
    if (q_ >= 1 && alpha1 < q_) return;  // beta_1^q = alpha_1 - q
    if (alpha1 == 0) {
      try_zero_tail();
      return;
    }
    prefix_.push_back(alpha1);
    descend(prefix_violation(1));
  }

 private:
  const SearchSpec& spec_;
  int n_;
  long long q_;
  long long budget_;
  std::optional<Clock::time_point> deadline_;
  CandidateBounds bounds_;
  std::vector<BigInt> prefix_;
  std::vector<Finding>* findings_ = nullptr;
  TaskStats* stats_ = nullptr;

  bool over_budget() {
    if (stats_->exhausted) return true;
    if (stats_->nodes >= budget_) {
      stats_->exhausted = true;
      return true;
    }
    if (deadline_ && (stats_->nodes & 4095) == 0 && Clock::now() > *deadline_) {
      stats_->exhausted = true;
      return true;
    }
    ++stats_->nodes;
    return false;
  }

  // does depth k of the current prefix break its bound?
  bool prefix_violation(long long k) {
    if (k > bounds_.level ||
        k >= static_cast<long long>(bounds_.bound.size()) || !bounds_.bound[k])
      return false;
    BigInt value = beta_prefix_sum(prefix_, bounds_.level, k, k);
    return value > *bounds_.bound[k];
  }

  void try_zero_tail() {
    // remaining coordinates all zero
    std::size_t i = prefix_.size() - 1;
    for (std::size_t j = i + 1; j <= static_cast<std::size_t>(n_); ++j)
      if (!spec_.constraints.admits(j, 0)) return;
    evaluate_leaf();
  }

  void descend(bool has_violation) {
    if (over_budget()) return;
    std::size_t i = prefix_.size() - 1;
    if (i == static_cast<std::size_t>(n_)) {
      evaluate_leaf();
      return;
    }
    if (!has_violation && !violation_reachable()) {
      ++stats_->pruned_no_violation;
      return;
    }

    long long j = static_cast<long long>(i) + 1;
    BigInt hi = chain_hi(n_, prefix_[i], static_cast<int>(j));
    BigInt lo = 0;
    if (j <= q_) {
      BigInt c = beta_prefix_sum(prefix_, q_, j, j - 1);
      if (c < 0) lo = -c;
    }

    const auto& pins = spec_.constraints.pinned;
    if (static_cast<std::size_t>(j) < pins.size() && pins[j]) {
      const BigInt& pin = *pins[j];
      if (pin == 0) {
        if (lo == 0) try_zero_tail();
      } else if (pin >= lo && pin <= hi) {
        prefix_.push_back(pin);
        descend(has_violation || prefix_violation(j));
        prefix_.pop_back();
      }
      return;
    }

    if (lo == 0) try_zero_tail();
    for (BigInt a = hi; a >= (lo > 0 ? lo : BigInt(1)); --a) {
      if (stats_->exhausted) return;
      prefix_.push_back(a);
      descend(has_violation || prefix_violation(j));
      prefix_.pop_back();
    }
  }

  // Interval reasoning: can any candidate beta still exceed its bound in
  // some feasible completion of the prefix? Sound (never prunes a live
  // subtree): exact prefix terms, kk_upper monotonicity for the chained
  // upper bounds, sign-appropriate interval endpoints, and a bucketed
  // maximization of kk_upper(x, k-1) - coef*x for the coupled
  // (alpha_{k-1}, alpha_k) pair.
  bool violation_reachable() {
    long long i = static_cast<long long>(prefix_.size()) - 1;
    long long L = bounds_.level;
    long long top = std::min<long long>(L, n_);
    if (i >= top) return false;  // all candidates already decided exactly

    std::vector<BigInt> lo(top + 1), hi(top + 1);
    lo[i] = prefix_[i];
    hi[i] = prefix_[i];
    for (long long j = i + 1; j <= top; ++j) {
      hi[j] = chain_hi(n_, hi[j - 1], static_cast<int>(j));
      lo[j] = 0;
      if (j <= q_) {
        // upper endpoint of the prefix part of beta_j^q: added terms at
        // hi, subtracted terms at lo
        BigInt c_hi = beta_prefix_sum(prefix_, q_, j, i);
        for (long long m = i + 1; m < j; ++m) {
          BigInt coef = binom(q_ - m, j - m);
          if ((j - m) % 2 == 0)
            c_hi += coef * hi[m];
          else
            c_hi -= coef * lo[m];
        }
        if (c_hi < 0) lo[j] = -c_hi;
        if (lo[j] > hi[j]) return false;  // no feasible completion at all
      }
    }

    for (long long k = i + 1; k <= top; ++k) {
      if (k >= static_cast<long long>(bounds_.bound.size()) || !bounds_.bound[k])
        continue;
      // everything except the top pair (alpha_{k-1}, alpha_k)
      BigInt base = beta_prefix_sum(prefix_, L, k, std::min(i, k - 2));
      for (long long m = i + 1; m <= k - 2; ++m) {
        BigInt coef = binom(L - m, k - m);
        if ((k - m) % 2 == 0)
          base += coef * hi[m];
        else
          base -= coef * lo[m];
      }
      // max of min(C(n,k), kk_upper(x, k-1)) - coef*x over x in [xlo, xhi]
      BigInt coef = L - k + 1;
      const BigInt& xlo = lo[k - 1];
      const BigInt& xhi = hi[k - 1];
      BigInt cap = binom(n_, k);
      const int kBuckets = 24;
      BigInt step = (xhi - xlo) / kBuckets + 1;
      bool first = true;
      BigInt pair_max = 0;
      for (BigInt a = xlo; a <= xhi; a += step) {
        BigInt b = a + step - 1;
        if (b > xhi) b = xhi;
        BigInt reach =
            k == 1 ? BigInt(n_) : (b == 0 ? BigInt(0) : kk_upper(b, k - 1));
        if (reach > cap) reach = cap;
        BigInt val = reach - coef * a;  // valid for every x in [a, b]
        if (first || val > pair_max) {
          pair_max = val;
          first = false;
        }
      }
      if (first) continue;  // empty interval
      if (base + pair_max > *bounds_.bound[k]) return true;
    }
    return false;
  }

  void evaluate_leaf() {
    ++stats_->leaves;
    AlphaVector alpha = padded(n_, prefix_);
    // full beta^q sign check (padded tail included)
    BetaTable bq = beta_table(alpha, q_);
    for (const auto& v : bq.values) {
      if (v < 0) {
        ++stats_->pruned_infeasible;
        return;
      }
    }
    HdepthReport quotient = hdepth(alpha);
    if (quotient.q_star != q_) return;  // found at its own target level

    BetaTable bl = bounds_.level == q_ ? bq : beta_table(alpha, bounds_.level);
    std::optional<Violation> violation;
    for (long long k = 0; k < static_cast<long long>(bounds_.bound.size()); ++k) {
      if (!bounds_.bound[k]) continue;
      const BigInt& value = bl.values[static_cast<std::size_t>(k)];
      if (value > *bounds_.bound[k]) {
        violation = Violation{bounds_.level, k, value, *bounds_.bound[k]};
        break;
      }
    }
    if (!violation) return;

    emit_finding(alpha, quotient, *violation);
  }

  void emit_finding(const AlphaVector& alpha, const HdepthReport& quotient,
                    const Violation& violation) {
    // re-verify: the realization must reproduce alpha exactly
    // (realize_colex checks this), and the ideal's report is recomputed
    // from the realization rather than trusted
    int limit = std::max(spec_.enum_cap, n_);
    SquarefreeIdeal realization = realize_colex(alpha, limit);
    AlphaVector alpha_ideal = alpha_of_ideal(realization, limit);
    for (int j = 0; j <= n_; ++j)
      if (alpha_ideal.counts[j] + alpha.counts[j] != binom(n_, j))
        throw std::logic_error("hunt: complement alpha mismatch");
    HdepthReport ideal_report = hdepth(alpha_ideal);

    // a violation certifies the corresponding hdepth comparison
    switch (spec_.predicate.kind) {
      case PredicateKind::hdepth_ideal_lt_quotient:
      case PredicateKind::at_least_fails:
        if (ideal_report.q_star >= q_)
          throw std::logic_error("hunt: lem22 violation without hdepth drop");
        break;
      case PredicateKind::strict_plus_one_fails:
        if (ideal_report.q_star >= q_ + 1)
          throw std::logic_error("hunt: lem2 violation without hdepth cap");
        break;
      case PredicateKind::custom_beta:
        break;
    }

    Finding finding;
    finding.alpha = alpha;
    finding.realization = std::move(realization);
    finding.quotient_report = quotient;
    finding.ideal_report = std::move(ideal_report);
    finding.violation = violation;
    findings_->push_back(std::move(finding));
  }
};

std::vector<long long> normalized_q_range(const SearchSpec& spec) {
  std::vector<long long> qs = spec.q_range;
  if (qs.empty())
    for (long long q = spec.n - 1; q >= 0; --q) qs.push_back(q);
  std::sort(qs.begin(), qs.end(), std::greater<>());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  for (long long q : qs)
    if (q < 0 || q >= spec.n)
      throw std::domain_error("hunt: q_range must sit inside [0, n-1]");
  return qs;
}

void validate_spec(const SearchSpec& spec) {
  if (spec.n < 1 || spec.n > kMaxVars)
    throw std::domain_error("hunt: need 1 <= n <= 63");
  if (spec.n > spec.enum_cap)
    throw std::domain_error("hunt: n = " + std::to_string(spec.n) +
                            " exceeds the sweep cap " +
                            std::to_string(spec.enum_cap) +
                            " (raise it explicitly to override)");
  if (spec.predicate.kind == PredicateKind::custom_beta &&
      (!spec.predicate.k || !spec.predicate.bound))
    throw std::domain_error("hunt: custom_beta needs both k and bound");
  if (spec.predicate.k && *spec.predicate.k < 0)
    throw std::domain_error("hunt: pinned k must be nonnegative");
  if (!spec.limits.sample && spec.limits.node_budget < 1)
    throw std::domain_error("hunt: node budget must be positive");
  if (spec.limits.sample && spec.limits.sample_count < 1)
    throw std::domain_error("hunt: sample count must be positive");
}

SearchOutcome hunt_sample(const SearchSpec& spec,
                          const std::vector<long long>& qs) {
  SearchOutcome outcome;
  std::set<std::vector<BigInt>> seen;
  const auto started = Clock::now();
  const auto& pins = spec.constraints.pinned;

  std::set<long long> qset(qs.begin(), qs.end());
  for (long long s = 0; s < spec.limits.sample_count; ++s) {
    if (spec.limits.time_budget_ms > 0 && (s & 1023) == 0) {
      auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                         Clock::now() - started)
                         .count();
      if (elapsed > spec.limits.time_budget_ms) {
        outcome.budget_exhausted = true;
        break;
      }
    }
    ++outcome.nodes;
    // per-sample engine: the stream is independent of threading/chunking
    Rng rng(spec.seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(s));
    std::vector<BigInt> prefix = {1};
    bool dead = false;
    for (int j = 1; j <= spec.n; ++j) {
      BigInt hi = chain_hi(spec.n, prefix.back(), j);
      BigInt a;
      if (static_cast<std::size_t>(j) < pins.size() && pins[j]) {
        a = *pins[j];
        if (a > hi) {
          dead = true;
          break;
        }
      } else {
        a = BigInt(rng.below(hi.convert_to<std::uint64_t>() + 1));
      }
      if (a == 0) break;
      prefix.push_back(a);
    }
    if (dead) continue;
    AlphaVector alpha = padded(spec.n, prefix);
    bool admitted = true;
    for (int j = 0; j <= spec.n && admitted; ++j)
      admitted = spec.constraints.admits(j, alpha.counts[j]);
    if (!admitted) continue;
    ++outcome.leaves;
    if (seen.count(alpha.counts)) continue;

    HdepthReport quotient = hdepth(alpha);
    if (!qset.count(quotient.q_star)) continue;
    long long q = quotient.q_star;
    CandidateBounds cb = make_bounds(spec, q);
    BetaTable bl = beta_table(alpha, cb.level);
    std::optional<Violation> violation;
    for (long long k = 0; k < static_cast<long long>(cb.bound.size()); ++k) {
      if (!cb.bound[k]) continue;
      const BigInt& value = bl.values[static_cast<std::size_t>(k)];
      if (value > *cb.bound[k]) {
        violation = Violation{cb.level, k, value, *cb.bound[k]};
        break;
      }
    }
    if (!violation) continue;

    seen.insert(alpha.counts);
    int limit = std::max(spec.enum_cap, spec.n);
    SquarefreeIdeal realization = realize_colex(alpha, limit);
    AlphaVector alpha_ideal = alpha_of_ideal(realization, limit);
    HdepthReport ideal_report = hdepth(alpha_ideal);
    if (spec.predicate.kind == PredicateKind::hdepth_ideal_lt_quotient &&
        ideal_report.q_star >= q)
      throw std::logic_error("hunt: lem22 violation without hdepth drop");

    Finding finding;
    finding.alpha = alpha;
    finding.realization = std::move(realization);
    finding.quotient_report = std::move(quotient);
    finding.ideal_report = std::move(ideal_report);
    finding.violation = *violation;
    outcome.findings.push_back(std::move(finding));
  }
  std::sort(outcome.findings.begin(), outcome.findings.end(),
            [](const Finding& a, const Finding& b) {
              return a.alpha.counts < b.alpha.counts;
            });
  return outcome;
}

}  // namespace

SearchOutcome hunt(const SearchSpec& spec) {
  validate_spec(spec);
  std::vector<long long> qs = normalized_q_range(spec);
  if (spec.limits.sample) return hunt_sample(spec, qs);

  std::optional<Clock::time_point> deadline;
  if (spec.limits.time_budget_ms > 0)
    deadline = Clock::now() + std::chrono::milliseconds(spec.limits.time_budget_ms);

  SearchOutcome outcome;

  // tasks: (q, alpha_1) cells in deterministic order with a static budget
  // split, so results never depend on the thread count
  struct Cell {
    long long q;
    BigInt alpha1;
  };
  std::vector<Cell> cells;
  for (long long q : qs)
    for (long long a1 = spec.n; a1 >= std::max<long long>(q, 0); --a1)
      cells.push_back({q, BigInt(a1)});

  long long per = spec.limits.node_budget / static_cast<long long>(cells.size());
  long long rem = spec.limits.node_budget % static_cast<long long>(cells.size());

  struct CellResult {
    std::vector<Finding> findings;
    TaskStats stats;
  };
  auto results = run_indexed_tasks<CellResult>(
      cells.size(), spec.threads, [&](std::size_t idx) {
        CellResult r;
        long long budget = per + (static_cast<long long>(idx) < rem ? 1 : 0);
        if (budget < 1) budget = 1;
        HuntTask task(spec, cells[idx].q, budget, deadline);
        task.run(cells[idx].alpha1, r.findings, r.stats);
        return r;
      });

  for (auto& r : results) {
    for (auto& f : r.findings) outcome.findings.push_back(std::move(f));
    outcome.nodes += r.stats.nodes;
    outcome.leaves += r.stats.leaves;
    outcome.pruned_infeasible += r.stats.pruned_infeasible;
    outcome.pruned_no_violation += r.stats.pruned_no_violation;
    outcome.budget_exhausted |= r.stats.exhausted;
  }
  std::sort(outcome.findings.begin(), outcome.findings.end(),
            [](const Finding& a, const Finding& b) {
              return a.alpha.counts < b.alpha.counts;
            });
  return outcome;
}

// ---- spec files ------------------------------------------------------------

namespace {

std::vector<long long> parse_q_field(const std::string& value) {
  std::vector<long long> qs;
  auto dots = value.find("..");
  if (dots != std::string::npos) {
    long long lo = std::stoll(value.substr(0, dots));
    long long hi = std::stoll(value.substr(dots + 2));
    for (long long q = lo; q <= hi; ++q) qs.push_back(q);
  } else {
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) qs.push_back(std::stoll(item));
  }
  return qs;
}

PredicateKind parse_predicate(const std::string& name) {
  if (name == "hdepth_ideal_lt_quotient")
    return PredicateKind::hdepth_ideal_lt_quotient;
  if (name == "at_least_fails") return PredicateKind::at_least_fails;
  if (name == "strict_plus_one_fails") return PredicateKind::strict_plus_one_fails;
  if (name == "custom_beta") return PredicateKind::custom_beta;
  throw std::invalid_argument("search spec: unknown predicate '" + name + "'");
}

std::string trimmed_view(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

void apply_field(SearchSpec& spec, bool& seed_seen, const std::string& key,
                 const std::string& value) {
  if (key == "n")
    spec.n = std::stoi(value);
  else if (key == "q")
    spec.q_range = parse_q_field(value);
  else if (key == "predicate")
    spec.predicate.kind = parse_predicate(value);
  else if (key == "k")
    spec.predicate.k = std::stoll(value);
  else if (key == "bound")
    spec.predicate.bound = BigInt(value);
  else if (key == "nodes")
    spec.limits.node_budget = std::stoll(value);
  else if (key == "time_ms")
    spec.limits.time_budget_ms = std::stoll(value);
  else if (key == "mode") {
    if (value == "sample")
      spec.limits.sample = true;
    else if (value == "dfs")
      spec.limits.sample = false;
    else
      throw std::invalid_argument("search spec: mode must be dfs or sample");
  } else if (key == "samples")
    spec.limits.sample_count = std::stoll(value);
  else if (key == "seed") {
    spec.seed = std::stoull(value);
    seed_seen = true;
  } else if (key == "threads")
    spec.threads = std::stoi(value);
  else if (key == "cap")
    spec.enum_cap = std::stoi(value);
  else if (key == "alpha_prefix") {
    std::stringstream ss(value);
    std::string item;
    spec.constraints.pinned.assign(1, std::nullopt);
    while (std::getline(ss, item, ','))
      spec.constraints.pinned.emplace_back(BigInt(trimmed_view(item)));
  } else
    throw std::invalid_argument("search spec: unknown key '" + key + "'");
}

}  // namespace

SearchSpec parse_search_spec(const std::string& text) {
  SearchSpec spec;
  bool seed_seen = false;
  std::string body = trimmed_view(text);
  if (body.empty()) throw std::invalid_argument("search spec: empty input");

  if (body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("search spec: bad JSON: ") + e.what());
    }
    if (!j.is_object())
      throw std::invalid_argument("search spec: JSON must be a single object");
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::string value;
      if (it->is_string())
        value = it->get<std::string>();
      else if (it->is_number_integer())
        value = std::to_string(it->get<long long>());
      else if (it->is_array()) {
        for (std::size_t i = 0; i < it->size(); ++i) {
          if (i) value += ",";
          value += std::to_string((*it)[i].get<long long>());
        }
      } else
        throw std::invalid_argument("search spec: unsupported JSON value for '" +
                                    it.key() + "'");
      apply_field(spec, seed_seen, it.key(), value);
    }
  } else {
    std::stringstream ss(body);
    std::string line;
    while (std::getline(ss, line)) {
      line = trimmed_view(line);
      if (line.empty() || line.front() == '#') continue;
      auto eq = line.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("search spec: expected key = value: " + line);
      apply_field(spec, seed_seen, trimmed_view(line.substr(0, eq)),
                  trimmed_view(line.substr(eq + 1)));
    }
  }

  if (spec.n == 0) throw std::invalid_argument("search spec: n is required");
  if (spec.limits.sample && !seed_seen)
    throw std::invalid_argument("search spec: sample mode requires a seed");
  return spec;
}

}  // namespace hilb
