#include "lackwalk/cli.hpp"

#include "lackwalk/analytics.hpp"
#include "lackwalk/csv.hpp"
#include "lackwalk/experiments.hpp"
#include "lackwalk/subspace.hpp"
#include "lackwalk/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace lackwalk::cli {

namespace {

struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct RunConfig
{
  Index n1 = 0, n2 = 0, k1 = 0, k2 = 0;
  double l1 = 0.0, l2 = 0.0;
  std::string init = "stationary";
  std::string engine; // empty: subspace when a reduced model exists, else full
  Index steps = -1;   // -1: default horizon
  std::string out_path;
  unsigned threads = 0;
  bool force = false;
  Index max_arcs = 5'000'000;
  std::string l1_range, l2_range;
  std::string metric = "runtime";
  Index verify_max_set_size = 6;
};

Range parse_range(std::string const &text, char const *flag)
{
  auto fail = [&] { throw UsageError(std::string(flag) + " expects lo:hi:n, got '" + text + "'"); };
  auto const a = text.find(':');
  auto const b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos) { fail(); }
  Range r;
  try {
    r.lo = std::stod(text.substr(0, a));
    r.hi = std::stod(text.substr(a + 1, b - a - 1));
    r.count = std::stoll(text.substr(b + 1));
  } catch (std::exception const &) {
    fail();
  }
  if (r.count < 1) { throw UsageError(std::string(flag) + " is empty (n must be >= 1)"); }
  if (r.hi < r.lo) { throw UsageError(std::string(flag) + " has hi < lo"); }
  return r;
}

Engine resolve_engine(RunConfig const &cfg, BipartiteInstance const &inst)
{
  if (!cfg.engine.empty()) { return parse_engine(cfg.engine); }
  return has_subspace_model(inst) ? Engine::Subspace : Engine::Full;
}

void check_engine(RunConfig const &cfg, BipartiteInstance const &inst, Engine engine)
{
  if (engine == Engine::Full && arc_count(inst) > cfg.max_arcs && !cfg.force) {
    throw std::invalid_argument("full engine refused: " + std::to_string(arc_count(inst)) + " arcs exceeds cap of "
                                + std::to_string(cfg.max_arcs) + " (use --force)");
  }
  if (engine == Engine::Subspace && inst.marked_count() > 0 && !has_subspace_model(inst)) {
    throw std::invalid_argument("no reduced model for this marking (all of a set marked); use --engine full");
  }
}

// Writes through `emit` to --out, or to `out` when no path was given.
template <typename Emit>
void write_output(RunConfig const &cfg, std::ostream &out, Emit &&emit)
{
  if (cfg.out_path.empty() || cfg.out_path == "-") {
    emit(out);
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) { throw std::runtime_error("cannot open '" + cfg.out_path + "' for writing"); }
  emit(file);
  file.flush();
  if (!file) { throw std::runtime_error("write to '" + cfg.out_path + "' failed"); }
}

BipartiteInstance instance_of(RunConfig const &cfg)
{
  return build_instance(cfg.n1, cfg.n2, cfg.l1, cfg.l2, cfg.k1, cfg.k2);
}

void cmd_simulate(RunConfig const &cfg, std::ostream &out)
{
  auto const inst = instance_of(cfg);
  auto const engine = resolve_engine(cfg, inst);
  check_engine(cfg, inst, engine);
  Index const steps = cfg.steps >= 0 ? cfg.steps : default_horizon(inst);
  auto const trace = compute_trace(inst, parse_initial_state(cfg.init), engine, steps);
  write_output(cfg, out, [&](std::ostream &os) { csv::write_trace(os, trace); });
}

void cmd_analytic(RunConfig const &cfg, std::ostream &out)
{
  auto const inst = instance_of(cfg);
  auto const init = parse_initial_state(cfg.init);
  auto num = [](double v) { return csv::format_double(v); };
  csv::KeyValues rows;
  auto add_prediction = [&](SpectralPrediction const &p) {
    rows.emplace_back("theta", num(p.theta));
    rows.emplace_back("phi", num(p.phi));
    rows.emplace_back("t_star", num(p.t_star));
    rows.emplace_back("p_star", num(p.p_star));
    rows.emplace_back("total_runtime", num(p.total_runtime));
  };

  if (is_symmetric_both_sets(inst)) {
    double const n = static_cast<double>(inst.vertex_count());
    double const k = static_cast<double>(inst.marked_count());
    rows.emplace_back("case", "symmetric");
    add_prediction(symmetric_peak(n, k, inst.l1));
    rows.emplace_back("optimal_l1", num(symmetric_optimal_l(k)));
    rows.emplace_back("optimal_l2", num(symmetric_optimal_l(k)));
    rows.emplace_back("min_total_runtime", num(symmetric_min_runtime(n, k)));
    rows.emplace_back("loopless_t_star", num(std::numbers::pi / 2 * std::sqrt(n / k)));
    rows.emplace_back("loopless_p_star", num(1.0));
  } else {
    BipartiteInstance one = inst;
    if (inst.k1 == 0 && inst.k2 > 0) { one = swap_sets(inst); }
    if (one.k1 < 1 || one.k2 != 0) {
      throw std::invalid_argument("no closed form for marked vertices in both sets unless symmetric; use the "
                                  "subspace engine");
    }
    rows.emplace_back("case", "one_set");
    add_prediction(one_set_peak(one, init));
    rows.emplace_back("optimal_l1", num(optimal_l1(one)));
    rows.emplace_back("optimal_l2", num(optimal_l2(static_cast<double>(one.k1))));
    rows.emplace_back("threshold_n2", num(improvement_threshold(static_cast<double>(one.n1))));
    if (init == InitialState::Uniform) {
      rows.emplace_back("p_star_lower_bound",
                        num(uniform_peak_lower_bound(static_cast<double>(one.n1), static_cast<double>(one.n2))));
    }
    auto const base = loopless_baselines(one, init);
    rows.emplace_back("loopless_t_star", num(base.t_star));
    rows.emplace_back("loopless_p_star", num(base.p_star));
  }
  write_output(cfg, out, [&](std::ostream &os) { csv::write_key_values(os, rows); });
}

void cmd_heatmap(RunConfig const &cfg, std::ostream &out)
{
  if (cfg.l1_range.empty() || cfg.l2_range.empty()) { throw UsageError("heatmap needs --l1-range and --l2-range"); }
  auto const l1 = parse_range(cfg.l1_range, "--l1-range");
  auto const l2 = parse_range(cfg.l2_range, "--l2-range");
  HeatmapMetric metric;
  if (cfg.metric == "pstar") {
    metric = HeatmapMetric::PeakProbability;
  } else if (cfg.metric == "runtime") {
    metric = HeatmapMetric::TotalRuntime;
  } else {
    throw UsageError("--metric must be pstar or runtime");
  }
  auto const base = build_instance(cfg.n1, cfg.n2, l1.lo, l2.lo, cfg.k1, cfg.k2);
  HeatmapOptions opts;
  opts.engine = resolve_engine(cfg, base);
  if (opts.engine == Engine::Analytic) { throw UsageError("heatmap supports the full and subspace engines"); }
  check_engine(cfg, base, opts.engine);
  opts.horizon = cfg.steps > 0 ? cfg.steps : 0;
  opts.threads = cfg.threads > 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  auto const grid = heatmap(base, parse_initial_state(cfg.init), l1, l2, metric, opts);
  write_output(cfg, out, [&](std::ostream &os) { csv::write_heatmap(os, grid); });
}

int cmd_verify(RunConfig const &cfg, std::ostream &out)
{
  VerifyOptions opts;
  opts.max_set_size = cfg.verify_max_set_size;
  auto const results = run_verification(opts);
  print_report(out, results);
  bool const ok = all_passed(results);
  out << (ok ? "all invariants hold\n" : "invariant check FAILED\n");
  return ok ? kExitOk : kExitFailure;
}

} // namespace

int run(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Lackadaisical quantum-walk search on complete bipartite graphs"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value file; flags given on the command line win");

  RunConfig cfg;
  app.add_option("--n1", cfg.n1, "vertices in set X");
  app.add_option("--n2", cfg.n2, "vertices in set Y");
  app.add_option("--l1", cfg.l1, "self-loop weight on X");
  app.add_option("--l2", cfg.l2, "self-loop weight on Y");
  app.add_option("--k1", cfg.k1, "marked vertices in X");
  app.add_option("--k2", cfg.k2, "marked vertices in Y");
  app.add_option("--init", cfg.init, "uniform|stationary")->check(CLI::IsMember({"uniform", "stationary"}));
  app.add_option("--engine", cfg.engine, "full|subspace|analytic")
    ->check(CLI::IsMember({"full", "subspace", "analytic"}));
  app.add_option("--steps", cfg.steps, "steps (simulate) or horizon (heatmap)");
  app.add_option("--out", cfg.out_path, "output CSV path (default: stdout)");
  app.add_option("--threads", cfg.threads, "heatmap worker threads")->envname("LACKWALK_THREADS");
  app.add_flag("--force", cfg.force, "allow the full engine above the arc cap");
  app.add_option("--max-arcs", cfg.max_arcs, "arc cap for the full engine");
  app.add_option("--l1-range", cfg.l1_range, "lo:hi:n");
  app.add_option("--l2-range", cfg.l2_range, "lo:hi:n");
  app.add_option("--metric", cfg.metric, "pstar|runtime");
  app.add_option("--max-set-size", cfg.verify_max_set_size, "largest n1, n2 in the verify cross-engine sweep");

  auto *simulate = app.add_subcommand("simulate", "write the p(t) trace as CSV (t,p)")->fallthrough();
  auto *analytic = app.add_subcommand("analytic", "write closed-form predictions as key,value CSV")->fallthrough();
  auto *heat = app.add_subcommand("heatmap", "sweep (l1, l2) and write peak/runtime grid CSV")->fallthrough();
  auto *verify = app.add_subcommand("verify", "run the invariant suite")->fallthrough();

  std::vector<char *> argv;
  std::string prog = "lackwalk";
  argv.push_back(prog.data());
  for (auto &a : args) { argv.push_back(a.data()); }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::ParseError const &e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (simulate->parsed()) { cmd_simulate(cfg, out); }
    if (analytic->parsed()) { cmd_analytic(cfg, out); }
    if (heat->parsed()) { cmd_heatmap(cfg, out); }
    if (verify->parsed()) { return cmd_verify(cfg, out); }
  } catch (UsageError const &e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

} // namespace lackwalk::cli
