// Batch front door: parse metric/section configs, dispatch computations,
// emit CSV/JSON reports. Exit codes: 0 ok, 1 computational failure,
// 2 validation error.

#include "shilov/config.hpp"
#include "shilov/errors.hpp"
#include "shilov/harness.hpp"
#include "shilov/io.hpp"
#include "shilov/props.hpp"
#include "shilov/solver.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace shilov;
using nlohmann::json;

struct CommonArgs {
  std::string config_path;
  std::string out_path;
  std::optional<int> nmax;
  std::optional<std::string> tol;
  std::optional<std::string> prec;
  std::optional<int> threads;
  std::optional<std::uint64_t> seed;
  std::string target;
};

ExperimentConfig load_with_overrides(const CommonArgs& args, bool need_config) {
  ExperimentConfig cfg;
  if (!args.config_path.empty())
    cfg = config_load(args.config_path);
  else if (need_config)
    throw ValidationError("--config is required for this command");
  if (args.nmax) cfg.nmax = *args.nmax;
  if (args.tol) {
    auto r = rat_parse(*args.tol);
    if (!r) throw ValidationError("--tol: cannot parse '" + *args.tol + "'");
    cfg.tol = *r;
  }
  if (args.prec) {
    auto r = rat_parse(*args.prec);
    if (!r) throw ValidationError("--prec: cannot parse '" + *args.prec + "'");
    cfg.prec = *r;
  }
  if (args.threads) cfg.threads = *args.threads;
  if (args.seed) cfg.seed = *args.seed;
  return cfg;
}

const MetricSpec& require_metric(const ExperimentConfig& cfg) {
  if (!cfg.metric) throw ValidationError("config: a [metric] block is required");
  return *cfg.metric;
}

HomPoly require_section(const ExperimentConfig& cfg, const std::string& name) {
  auto it = cfg.sections.find(name);
  if (it == cfg.sections.end())
    throw ValidationError("config: section '" + name + "' is required");
  return poly_parse(it->second, require_metric(cfg).dim_projective());
}

std::vector<Rat> parse_target(const std::string& text) {
  std::vector<Rat> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
    auto r = rat_parse(piece);
    if (!r) throw ValidationError("--target: cannot parse '" + piece + "'");
    out.push_back(*r);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) return;
  std::ofstream out(out_path);
  if (!out) throw ValidationError("cannot open output file '" + out_path + "'");
  out << payload;
}

json measure_json(const EqMeasure& mu) {
  json lam = json::array();
  for (const Rat& l : mu.lambda) lam.push_back(rat_str(l));
  json j = {{"lambda", lam},
            {"shilov", mu.shilov},
            {"method", mu.method == EqMeasure::Method::Volume ? "volume" : "counting"}};
  if (mu.err_bound) j["err_bound"] = rat_str(*mu.err_bound);
  return j;
}

int cmd_shilov(const CommonArgs& args) {
  ExperimentConfig cfg = load_with_overrides(args, true);
  const MetricSpec& spec = require_metric(cfg);
  ShilovSet sh = shilov_set(spec);

  json report;
  report["metric"] = json::parse(metric_to_json(spec))["metric"];
  json members = json::array();
  std::cout << "shilov indices:";
  for (std::size_t k = 0; k < sh.indices.size(); ++k) {
    std::cout << " " << sh.indices[k];
    json w = json::array();
    for (const Rat& x : sh.witnesses[k]) w.push_back(rat_str(x));
    members.push_back({{"index", sh.indices[k]}, {"witness", w}});
  }
  std::cout << "\n";
  report["shilov"] = members;

  json dom = json::array();
  for (std::size_t i = 0; i < spec.size(); ++i)
    for (std::size_t j = 0; j < spec.size(); ++j) {
      if (i == j) continue;
      if (dominance(spec.points()[i], spec.points()[j])) {
        std::cout << "point " << i << " is dominated by point " << j << "\n";
        dom.push_back({{"lower", i}, {"upper", j}});
      }
    }
  report["dominance"] = dom;

  json seps = json::array();
  for (const auto& j_subset : cfg.separate) {
    HomPoly f = separating_section(spec, j_subset);
    std::cout << "separating J={";
    for (std::size_t k = 0; k < j_subset.size(); ++k)
      std::cout << (k ? "," : "") << j_subset[k];
    std::cout << "}: " << f.str() << "\n";
    seps.push_back({{"j", j_subset}, {"section", f.str()}});
  }
  report["separating"] = seps;

  write_output(args.out_path, report.dump(2) + "\n");
  return 0;
}

int cmd_lambda(const CommonArgs& args) {
  ExperimentConfig cfg = load_with_overrides(args, true);
  const MetricSpec& spec = require_metric(cfg);
  EqMeasureOptions opts;
  opts.counting_level = cfg.counting_level;
  EqMeasure mu = eq_measure(spec, opts);
  std::cout << "index,lambda\n";
  for (std::size_t a = 0; a < mu.lambda.size(); ++a)
    std::cout << a << "," << rat_str(mu.lambda[a]) << "\n";
  write_output(args.out_path, measure_json(mu).dump(2) + "\n");
  return 0;
}

int cmd_limit(const CommonArgs& args) {
  ExperimentConfig cfg = load_with_overrides(args, true);
  const MetricSpec& spec = require_metric(cfg);
  HomPoly s = require_section(cfg, "s");
  if (s.degree() != 1) throw ValidationError("limit: section must have degree 1");

  HarnessOptions opts;
  opts.svd.initial_cap = cfg.prec;
  opts.svd.max_doublings = cfg.prec_doublings;
  opts.threads = cfg.threads;
  ConvergenceReport rep = theorem_harness(spec, s, cfg.nmax, opts);
  std::string csv = report_csv(rep);
  std::cout << csv;
  std::cout << "# rhs = " << rat_str(rep.rhs) << ", fitted C = " << rat_str(rep.fitted_c)
            << ", band = [" << rat_str(rep.band_low) << ", " << rat_str(rep.band_high) << "]\n";
  write_output(args.out_path, csv);
  return 0;
}

int cmd_distance(const CommonArgs& args) {
  ExperimentConfig cfg = load_with_overrides(args, true);
  const MetricSpec& spec = require_metric(cfg);
  if (!cfg.metric2) throw ValidationError("distance: a [metric2] block is required");
  MetricDistance dist = metric_distance(spec, *cfg.metric2);
  MeasureDistanceCheck chk = measure_distance_check(spec, *cfg.metric2);
  std::cout << "d_inf = " << rat_str(dist.d_inf) << "\n";
  std::cout << "d_1 = " << rat_str(dist.d_1) << (dist.d1_exact ? "" : " (estimated)") << "\n";
  std::cout << "measure distance (monomial sections) = " << rat_str(chk.d_mono)
            << ", bound 2*d_1 = " << rat_str(chk.bound) << "\n";
  json j = {{"d_inf", rat_str(dist.d_inf)},
            {"d_1", rat_str(dist.d_1)},
            {"d1_exact", dist.d1_exact},
            {"d_mono", rat_str(chk.d_mono)},
            {"bound", rat_str(chk.bound)},
            {"holds", chk.holds}};
  write_output(args.out_path, j.dump(2) + "\n");
  return 0;
}

int cmd_solve(const CommonArgs& args) {
  ExperimentConfig cfg = load_with_overrides(args, true);
  const MetricSpec& spec = require_metric(cfg);

  SolveProblem problem;
  problem.d = spec.dim_projective();
  for (const auto& z : spec.points()) problem.weights.push_back(z.w);
  if (!args.target.empty())
    problem.target = parse_target(args.target);
  else if (cfg.target)
    problem.target = *cfg.target;
  else
    throw ValidationError("solve: a target is required (--target or [solve] target)");

  SolveOptions opts;
  opts.tolerance = cfg.tol;
  SolveResult r = solve_prescribed(problem, opts);

  json shifts = json::array(), achieved = json::array();
  for (const Rat& c : r.shifts) shifts.push_back(rat_str(c));
  for (const Rat& v : r.achieved) achieved.push_back(rat_str(v));
  json dropped = json::array();
  for (std::size_t i = 0; i < r.dropped.size(); ++i)
    if (r.dropped[i]) dropped.push_back(i);
  json j = {{"shifts", shifts},
            {"achieved", achieved},
            {"residual", rat_str(r.residual)},
            {"residual_approx", rat_to_double(r.residual)},
            {"dropped", dropped},
            {"iterations", r.iterations}};
  std::cout << j.dump(2) << "\n";
  write_output(args.out_path, j.dump(2) + "\n");
  return 0;
}

int cmd_props(const CommonArgs& args) {
  ExperimentConfig cfg = load_with_overrides(args, false);
  props::SuiteResult r = props::run_all_props(cfg.seed, std::cout);
  std::cout << r.passed << " passed, " << r.failed << " failed\n";
  return r.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Shilov-finite metrics on P^d over Hahn series"};
  app.require_subcommand(1);

  CommonArgs args;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", args.config_path, "TOML or JSON experiment config");
    sub->add_option("--out", args.out_path, "write the machine-readable report here");
    sub->add_option("--nmax", args.nmax, "maximum degree for limit reports");
    sub->add_option("--tol", args.tol, "solver tolerance (rational or decimal)");
    sub->add_option("--prec", args.prec, "truncation cap in valuation units");
    sub->add_option("--threads", args.threads, "worker threads (0 = hardware)");
    sub->add_option("--seed", args.seed, "seed for the property suites");
    return sub;
  };

  auto* c_shilov = add_common(app.add_subcommand("shilov", "Shilov set, dominance, separators"));
  auto* c_lambda = add_common(app.add_subcommand("lambda", "equidistribution coefficients"));
  auto* c_limit = add_common(app.add_subcommand("limit", "convergence report for the limit formula"));
  auto* c_distance = add_common(app.add_subcommand("distance", "metric and measure distances"));
  auto* c_solve = add_common(app.add_subcommand("solve", "prescribed-measure shifts"));
  c_solve->add_option("--target", args.target, "target coefficients, e.g. 3/4,1/4");
  auto* c_props = add_common(app.add_subcommand("props", "run the property suites"));

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_shilov->parsed()) return cmd_shilov(args);
    if (c_lambda->parsed()) return cmd_lambda(args);
    if (c_limit->parsed()) return cmd_limit(args);
    if (c_distance->parsed()) return cmd_distance(args);
    if (c_solve->parsed()) return cmd_solve(args);
    if (c_props->parsed()) return cmd_props(args);
  } catch (const shilov::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const shilov::ComputeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
