#include <hilb/combinatorics.hpp>
#include <hilb/hdepth.hpp>
#include <hilb/ideals.hpp>
#include <hilb/search.hpp>
#include <hilb/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

json json_int(const hilb::BigInt& v) {
  if (hilb::fits_int64(v)) return v.convert_to<std::int64_t>();
  return v.str();  // exact, just not a JSON number anymore
}

json json_vec(const std::vector<hilb::BigInt>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(json_int(x));
  return arr;
}

std::string text_vec(const std::vector<hilb::BigInt>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

struct IdealInput {
  std::string inline_gens;
  std::string file;
  std::vector<std::string> intersect;
  int n = 0;

  hilb::MonomialIdeal parse() const {
    int sources = (!inline_gens.empty() ? 1 : 0) + (!file.empty() ? 1 : 0) +
                  (!intersect.empty() ? 1 : 0);
    if (sources != 1)
      throw std::invalid_argument(
          "provide exactly one ideal source: generators, --file or --intersect");
    if (!intersect.empty()) {
      auto a = hilb::parse_ideal(intersect[0], n);
      auto b = hilb::parse_ideal(intersect[1], n);
      if (a.n != b.n) {
        int m = std::max(a.n, b.n);
        a = hilb::parse_ideal(intersect[0], m);
        b = hilb::parse_ideal(intersect[1], m);
      }
      return hilb::intersect(a, b);
    }
    std::string text = inline_gens;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in)
        throw std::invalid_argument("cannot open ideal file: " + file);
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    return hilb::parse_ideal(text, n);
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("generators", inline_gens,
                    "generator list, e.g. \"x1x2, x1x3, x3^2*x4\"");
    cmd->add_option("--file", file, "file holding the generator list");
    cmd->add_option("--intersect", intersect,
                    "two generator lists; the ideal is their intersection")
        ->expected(2);
    cmd->add_option("--n", n, "ambient variable count (default: inferred)");
  }
};

struct ModeReports {
  bool quotient = false;
  bool ideal = false;
  hilb::GeneralHdepth q_report;
  hilb::GeneralHdepth i_report;
  std::optional<hilb::CompareReport> compare;
};

ModeReports compute_reports(const hilb::MonomialIdeal& parsed,
                            const std::string& mode, int limit) {
  if (parsed.is_zero())
    throw std::domain_error("the zero ideal is rejected: the poset is empty");
  if (parsed.is_unit())
    throw std::domain_error("the unit ideal is rejected: 1 lies in every piece");

  ModeReports out;
  out.quotient = mode == "quotient" || mode == "both";
  out.ideal = mode == "ideal" || mode == "both";
  if (out.quotient)
    out.q_report = hilb::hdepth_general(parsed, hilb::Mode::quotient, limit);
  if (out.ideal)
    out.i_report = hilb::hdepth_general(parsed, hilb::Mode::ideal, limit);
  if (out.quotient) {
    const auto& rep = out.q_report.polarized;
    out.compare = hilb::compare_criteria(rep.alpha, rep.q_star);
  }
  return out;
}

json report_json(const hilb::GeneralHdepth& g) {
  json j;
  j["alpha"] = json_vec(g.polarized.alpha.counts);
  j["hdepth"] = g.value;
  j["dim"] = g.dim;
  j["beta_at_hdepth"] = json_vec(g.polarized.beta_at_qstar.values);
  json rejected = json::array();
  for (const auto& r : g.polarized.rejected)
    rejected.push_back({{"q", r.q}, {"k", r.k}, {"beta", json_int(r.beta)}});
  j["rejected"] = rejected;
  if (g.extra_vars > 0) {
    j["polarized"] = {{"extra_vars", g.extra_vars},
                      {"n", g.polarized.alpha.n},
                      {"hdepth", g.polarized.q_star}};
  }
  return j;
}

json compare_json(const hilb::CompareReport& cmp) {
  json j;
  j["at_least"] = cmp.at_least;
  j["strict_plus_one"] = cmp.strict_plus_one;
  json av = json::array();
  for (const auto& w : cmp.at_least_violations)
    av.push_back({{"k", w.k}, {"beta", json_int(w.value)}, {"bound", json_int(w.bound)}});
  j["at_least_violations"] = av;
  json sv = json::array();
  for (const auto& w : cmp.strict_violations)
    sv.push_back({{"k", w.k}, {"beta", json_int(w.value)}, {"bound", json_int(w.bound)}});
  j["strict_violations"] = sv;
  return j;
}

void print_report_text(const std::string& label, const hilb::GeneralHdepth& g) {
  if (g.extra_vars > 0)
    std::cout << "polarized: +" << g.extra_vars << " variables, squarefree n = "
              << g.polarized.alpha.n << ", hdepth there = " << g.polarized.q_star
              << "\n";
  std::cout << "alpha(" << label << ") = " << text_vec(g.polarized.alpha.counts)
            << "\n";
  std::cout << "hdepth(" << label << ") = " << g.value << "   dim = " << g.dim
            << "\n";
  std::cout << "beta^" << g.polarized.q_star << "(" << label
            << ") = " << text_vec(g.polarized.beta_at_qstar.values) << "\n";
  if (!g.polarized.rejected.empty()) {
    std::cout << "rejected levels:";
    for (const auto& r : g.polarized.rejected)
      std::cout << "  q=" << r.q << " (k=" << r.k << ", beta=" << r.beta.str()
                << ")";
    std::cout << "\n";
  }
}

void print_compare_text(const hilb::CompareReport& cmp) {
  std::cout << "hdepth(I) >= hdepth(S/I): " << (cmp.at_least ? "yes" : "no");
  for (const auto& w : cmp.at_least_violations)
    std::cout << "  [k=" << w.k << ", beta=" << w.value.str() << " > bound "
              << w.bound.str() << "]";
  std::cout << "\n";
  std::cout << "hdepth(I) >= hdepth(S/I)+1: "
            << (cmp.strict_plus_one ? "yes" : "no");
  for (const auto& w : cmp.strict_violations)
    std::cout << "  [k=" << w.k << ", beta=" << w.value.str() << " > bound "
              << w.bound.str() << "]";
  std::cout << "\n";
}

int run_alpha_beta_hdepth(const std::string& cmd, const IdealInput& input,
                          const std::string& mode, long long q_level,
                          bool as_json, int limit) {
  hilb::MonomialIdeal parsed = input.parse();
  ModeReports reports = compute_reports(parsed, mode, limit);

  json j;
  j["n"] = parsed.n;
  j["mode"] = mode;
  j["ideal_generators"] = hilb::format_ideal(parsed);

  if (cmd == "hdepth") {
    if (mode == "both") {
      j["quotient"] = report_json(reports.q_report);
      j["ideal"] = report_json(reports.i_report);
    } else {
      json inner = report_json(mode == "quotient" ? reports.q_report
                                                  : reports.i_report);
      j.update(inner);
    }
    if (reports.compare) j["compare"] = compare_json(*reports.compare);
  } else if (cmd == "alpha") {
    if (reports.quotient)
      j["alpha_quotient"] = json_vec(reports.q_report.polarized.alpha.counts);
    if (reports.ideal)
      j["alpha_ideal"] = json_vec(reports.i_report.polarized.alpha.counts);
  } else {  // beta
    if (reports.quotient) {
      auto bt = hilb::beta_table(reports.q_report.polarized.alpha, q_level);
      j["beta_quotient"] = json_vec(bt.values);
    }
    if (reports.ideal) {
      auto bt = hilb::beta_table(reports.i_report.polarized.alpha, q_level);
      j["beta_ideal"] = json_vec(bt.values);
    }
    j["q"] = q_level;
  }

  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "n = " << parsed.n << "   I = " << hilb::format_ideal(parsed)
            << "\n";
  if (cmd == "alpha") {
    if (reports.quotient)
      std::cout << "alpha(S/I) = "
                << text_vec(reports.q_report.polarized.alpha.counts) << "\n";
    if (reports.ideal)
      std::cout << "alpha(I) = "
                << text_vec(reports.i_report.polarized.alpha.counts) << "\n";
  } else if (cmd == "beta") {
    if (reports.quotient)
      std::cout << "beta^" << q_level << "(S/I) = "
                << text_vec(
                       hilb::beta_table(reports.q_report.polarized.alpha, q_level)
                           .values)
                << "\n";
    if (reports.ideal)
      std::cout << "beta^" << q_level << "(I) = "
                << text_vec(
                       hilb::beta_table(reports.i_report.polarized.alpha, q_level)
                           .values)
                << "\n";
  } else {
    if (reports.quotient) print_report_text("S/I", reports.q_report);
    if (reports.ideal) print_report_text("I", reports.i_report);
    if (reports.compare) print_compare_text(*reports.compare);
  }
  return kExitOk;
}

int run_compare(const IdealInput& input, bool as_json, int limit) {
  hilb::MonomialIdeal parsed = input.parse();
  ModeReports reports = compute_reports(parsed, "both", limit);

  if (as_json) {
    json j;
    j["n"] = parsed.n;
    j["ideal_generators"] = hilb::format_ideal(parsed);
    j["hdepth_quotient"] = reports.q_report.value;
    j["hdepth_ideal"] = reports.i_report.value;
    j["compare"] = compare_json(*reports.compare);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "n = " << parsed.n << "   I = " << hilb::format_ideal(parsed)
            << "\n";
  std::cout << "hdepth(S/I) = " << reports.q_report.value
            << "   hdepth(I) = " << reports.i_report.value << "\n";
  print_compare_text(*reports.compare);
  return kExitOk;
}

int run_polarize(const IdealInput& input, bool as_json) {
  hilb::MonomialIdeal parsed = input.parse();
  hilb::Polarization pol = hilb::polarize(parsed);

  if (as_json) {
    json j;
    j["n"] = parsed.n;
    j["extra_vars"] = pol.extra_vars;
    j["polarized_n"] = pol.ideal.n;
    json gens = json::array();
    for (auto g : pol.ideal.gens) gens.push_back(hilb::format_subset_monomial(g));
    j["generators"] = gens;
    json origin = json::array();
    for (std::size_t v = 0; v < pol.origin.size(); ++v)
      origin.push_back({{"var", v + 1},
                        {"origin", pol.origin[v].first},
                        {"slot", pol.origin[v].second}});
    j["variable_map"] = origin;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "n = " << parsed.n << "   I = " << hilb::format_ideal(parsed)
            << "\n";
  std::cout << "polarization adds N = " << pol.extra_vars
            << " variables (total " << pol.ideal.n << ")\n";
  std::cout << "I^p = " << hilb::format_ideal(pol.ideal) << "\n";
  std::cout << "variable map:";
  for (std::size_t v = 0; v < pol.origin.size(); ++v)
    std::cout << "  x" << v + 1 << " <- x_{" << pol.origin[v].first << ","
              << pol.origin[v].second << "}";
  std::cout << "\n";
  return kExitOk;
}

int run_search(const std::string& spec_path, int threads_override,
               std::uint64_t seed_override, bool seed_given) {
  std::string text;
  if (spec_path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(spec_path);
    if (!in) throw std::invalid_argument("cannot open spec file: " + spec_path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  hilb::SearchSpec spec = hilb::parse_search_spec(text);
  if (threads_override > 0) spec.threads = threads_override;
  if (seed_given) spec.seed = seed_override;

  auto start = std::chrono::steady_clock::now();
  hilb::SearchOutcome outcome = hilb::hunt(spec);
  auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  for (const auto& f : outcome.findings) {
    json j;
    j["n"] = spec.n;
    j["alpha"] = json_vec(f.alpha.counts);
    j["hdepth_quotient"] = f.quotient_report.q_star;
    j["hdepth_ideal"] = f.ideal_report.q_star;
    j["dim"] = f.quotient_report.dim;
    j["violation"] = {{"level", f.violation.q},
                      {"k", f.violation.k},
                      {"beta", json_int(f.violation.value)},
                      {"bound", json_int(f.violation.bound)}};
    json gens = json::array();
    for (auto g : f.realization.gens)
      gens.push_back(hilb::format_subset_monomial(g));
    j["ideal"] = {{"n", f.realization.n}, {"generators", gens}};
    std::cout << j.dump() << "\n";
  }
  std::cerr << "search: findings=" << outcome.findings.size()
            << " nodes=" << outcome.nodes << " leaves=" << outcome.leaves
            << " pruned_no_violation=" << outcome.pruned_no_violation
            << " pruned_infeasible=" << outcome.pruned_infeasible
            << (outcome.budget_exhausted ? " budget=exhausted" : " budget=ok")
            << " wall_ms=" << wall_ms << "\n";
  return kExitOk;
}

int run_verify(const std::string& only, const std::vector<std::string>& scales,
               int threads, std::uint64_t seed, bool seed_given, bool as_json) {
  hilb::VerifyOptions opt;
  opt.threads = threads > 0 ? threads : 1;
  if (seed_given) opt.seed = seed;

  for (const auto& s : scales) {
    auto eq = s.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--scale expects key=value, got: " + s);
    std::string key = s.substr(0, eq), value = s.substr(eq + 1);
    auto parse_scale = [&](hilb::ScaleSpec& spec) {
      if (value == "exhaustive") {
        spec.exhaustive = true;
      } else if (value.rfind("sampled", 0) == 0) {
        spec.exhaustive = false;
        auto colon = value.find(':');
        if (colon != std::string::npos)
          spec.samples = std::stoll(value.substr(colon + 1));
      } else {
        spec.exhaustive = false;
        spec.samples = std::stoll(value);
      }
    };
    if (key == "n6")
      parse_scale(opt.n6);
    else if (key == "n7")
      parse_scale(opt.n7);
    else if (key == "magic")
      opt.magic_max_n = std::stoi(value);
    else if (key == "teo2")
      opt.teo2_random_samples = std::stoll(value);
    else if (key == "t3main")
      opt.targeted_samples = std::stoll(value);
    else if (key == "bbounds")
      opt.bbound_samples = std::stoll(value);
    else if (key == "patrat")
      opt.patrat_samples = std::stoll(value);
    else if (key == "pipelines")
      opt.pipeline_ideals_per_n = std::stoll(value);
    else if (key == "polarization")
      opt.polarization_samples = std::stoll(value);
    else
      throw std::invalid_argument("--scale: unknown key '" + key + "'");
  }

  auto results = hilb::run_checks(opt, only);
  if (results.empty())
    throw std::invalid_argument("--only '" + only + "' matches no check");

  bool all_pass = true;
  long long total_items = 0;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    total_items += r.items;
  }

  if (as_json) {
    json j;
    j["pass"] = all_pass;
    json arr = json::array();
    for (const auto& r : results) {
      json e;
      e["name"] = r.name;
      e["pass"] = r.pass;
      e["items"] = r.items;
      e["seconds"] = r.seconds;
      e["failures"] = r.failures;
      arr.push_back(e);
    }
    j["checks"] = arr;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  ("
                << r.items << " checks, " << std::fixed << std::setprecision(2)
                << r.seconds << "s)\n";
      for (const auto& f : r.failures) std::cout << "      " << f << "\n";
    }
    std::cout << (all_pass ? "OK" : "MISMATCH") << ": " << results.size()
              << " check groups, " << total_items << " assertions\n";
  }
  return all_pass ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert depth of squarefree monomial ideals: exact alpha/beta "
               "transforms, comparisons and Kruskal-Katona searches"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string mode = "quotient";
  long long q_level = 0;
  int limit_subsets = hilb::kDefaultSubsetLimit;
  int threads = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;

  IdealInput alpha_in, beta_in, hdepth_in, compare_in, polarize_in;

  auto* alpha_cmd = app.add_subcommand("alpha", "alpha-vector of S/I and/or I");
  alpha_in.attach(alpha_cmd);
  alpha_cmd->add_option("--mode", mode, "quotient | ideal | both");
  alpha_cmd->add_option("--limit-subsets", limit_subsets,
                        "enumeration gate (default 24)");

  auto* beta_cmd = app.add_subcommand("beta", "beta table at a level q");
  beta_in.attach(beta_cmd);
  beta_cmd->add_option("--q", q_level, "level of the table")->required();
  beta_cmd->add_option("--mode", mode, "quotient | ideal | both");
  beta_cmd->add_option("--limit-subsets", limit_subsets,
                       "enumeration gate (default 24)");

  auto* hdepth_cmd = app.add_subcommand("hdepth", "Hilbert depth report");
  hdepth_in.attach(hdepth_cmd);
  hdepth_cmd->add_option("--mode", mode, "quotient | ideal | both");
  hdepth_cmd->add_option("--limit-subsets", limit_subsets,
                         "enumeration gate (default 24)");

  auto* compare_cmd =
      app.add_subcommand("compare", "hdepth(I) vs hdepth(S/I) criteria");
  compare_in.attach(compare_cmd);
  compare_cmd->add_option("--limit-subsets", limit_subsets,
                          "enumeration gate (default 24)");

  auto* polarize_cmd = app.add_subcommand("polarize", "standard polarization");
  polarize_in.attach(polarize_cmd);

  std::string spec_path;
  auto* search_cmd =
      app.add_subcommand("search", "hunt feasible alpha-vectors (JSON lines)");
  search_cmd->add_option("spec", spec_path, "search spec file, or - for stdin")
      ->required();
  search_cmd->add_option("--threads", threads, "worker threads (default 1)");
  auto* seed_opt =
      search_cmd->add_option("--seed", seed, "override the spec seed");

  std::string only;
  std::vector<std::string> scales;
  auto* verify_cmd = app.add_subcommand(
      "verify-paper", "replay the paper's examples and theorem sweeps");
  verify_cmd->add_option("--only", only, "run checks whose name contains this");
  verify_cmd->add_option("--scale", scales,
                         "tune a sweep, e.g. n6=exhaustive or n7=sampled:200000");
  verify_cmd->add_option("--threads", threads, "worker threads (default 1)");
  auto* vseed_opt = verify_cmd->add_option("--seed", seed, "sweep RNG seed");

  CLI11_PARSE(app, argc, argv);
  seed_given = seed_opt->count() > 0 || vseed_opt->count() > 0;

  try {
    if (alpha_cmd->parsed())
      return run_alpha_beta_hdepth("alpha", alpha_in, mode, 0, as_json,
                                   limit_subsets);
    if (beta_cmd->parsed())
      return run_alpha_beta_hdepth("beta", beta_in, mode, q_level, as_json,
                                   limit_subsets);
    if (hdepth_cmd->parsed())
      return run_alpha_beta_hdepth("hdepth", hdepth_in, mode, 0, as_json,
                                   limit_subsets);
    if (compare_cmd->parsed()) return run_compare(compare_in, as_json, limit_subsets);
    if (polarize_cmd->parsed()) return run_polarize(polarize_in, as_json);
    if (search_cmd->parsed())
      return run_search(spec_path, threads, seed, seed_given);
    if (verify_cmd->parsed())
      return run_verify(only, scales, threads, seed, seed_given, as_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
