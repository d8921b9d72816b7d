// reachkit command-line front end: verify / risk / sweep / simulate.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reachkit/aeb.hpp"
#include "reachkit/config.hpp"
#include "reachkit/outputs.hpp"
#include "reachkit/risk.hpp"
#include "reachkit/verifier.hpp"
#include "reachkit/version.hpp"

namespace {

namespace fs = std::filesystem;
using namespace reachkit;

constexpr int kExitUnknown = 2;
constexpr int kExitConfig = 64;
constexpr int kExitError = 70;

struct CommonOpts {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  int jobs = 1;
};

struct LoadedRun {
  RunConfig cfg;
  std::string config_bytes;
  fs::path out;
};

LoadedRun prepare(const CommonOpts& opts) {
  LoadedRun run;
  run.cfg = load_config(opts.config_path);
  std::ifstream in(opts.config_path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  run.config_bytes = buf.str();
  if (opts.seed) run.cfg.verifier.seed = *opts.seed;
  run.out = opts.out_dir ? fs::path(*opts.out_dir) : fs::path(run.cfg.outputs);
  fs::create_directories(run.out);
  return run;
}

int cmd_verify(const CommonOpts& opts) {
  LoadedRun run = prepare(opts);
  const auto& scenario = run.cfg.scenario;
  aeb::ScenarioSet set = aeb::build_initial_set(scenario);
  auto [disc, verdict] = train_and_verify(
      aeb::make_sim_fn(scenario), set.initial, set.unsafe, run.cfg.verifier,
      aeb::make_severity_fn(scenario, run.cfg.verifier.boundary_margin));
  (void)disc;

  fs::path verdict_path = run.out / "verdict.json";
  write_verdict(verdict_path.string(), to_record(verdict, run.cfg.verifier.tau));
  write_manifest((run.out / "manifest.json").string(), "verify", run.config_bytes,
                 run.cfg.verifier.seed, {verdict_path.filename().string()});

  std::cout << "verdict: " << to_string(verdict.kind)
            << "  cells: " << verdict.cells_processed
            << "  max depth: " << verdict.max_depth_reached;
  if (verdict.severity_bound) {
    std::cout << "  severity bound: " << *verdict.severity_bound << " m/s";
  }
  std::cout << "\n";
  switch (verdict.kind) {
    case VerdictKind::Safe: return 0;
    case VerdictKind::Unsafe: return 1;
    case VerdictKind::Unknown: return kExitUnknown;
  }
  return kExitError;
}

int cmd_risk(const CommonOpts& opts) {
  LoadedRun run = prepare(opts);
  if (!run.cfg.risk || !run.cfg.risk->d_dist || !run.cfg.risk->r_dist) {
    throw ConfigError(opts.config_path +
                      ": risk needs a 'risk' section with d_dist and r_dist");
  }
  const RiskSection& section = *run.cfg.risk;
  risk::RiskGrid grid =
      risk::build_risk_grid(run.cfg.scenario, section.n_d, section.n_r,
                            *section.d_dist, *section.r_dist, run.cfg.verifier,
                            opts.jobs);
  double expected = risk::expected_severity(grid);

  fs::path csv = run.out / "heatmap.csv";
  fs::path svg = run.out / "heatmap.svg";
  fs::path summary = run.out / "summary.json";
  write_grid_csv(csv.string(), grid);
  write_heatmap_svg(svg.string(), grid.grid);
  {
    std::ofstream out(summary);
    out << "{\n  \"expected_severity_mps\": " << expected << ",\n  \"n_d\": "
        << section.n_d << ",\n  \"n_r\": " << section.n_r << "\n}\n";
  }
  write_manifest((run.out / "manifest.json").string(), "risk", run.config_bytes,
                 run.cfg.verifier.seed,
                 {csv.filename().string(), svg.filename().string(),
                  summary.filename().string()});
  std::cout << "expected severity: " << expected << " m/s over " << section.n_d
            << "x" << section.n_r << " cells\n";
  return 0;
}

int cmd_sweep(const CommonOpts& opts) {
  LoadedRun run = prepare(opts);
  if (!run.cfg.risk) {
    throw ConfigError(opts.config_path + ": sweep needs a 'risk' section");
  }
  const RiskSection& section = *run.cfg.risk;
  risk::VerdictGrid grid =
      risk::build_verdict_grid(run.cfg.scenario, section.n_d, section.n_r,
                               run.cfg.verifier, opts.jobs, section.axes);
  fs::path csv = run.out / "sweep.csv";
  fs::path svg = run.out / "heatmap.svg";
  write_sweep_csv(csv.string(), grid);
  write_heatmap_svg(svg.string(), grid);
  write_manifest((run.out / "manifest.json").string(), "sweep", run.config_bytes,
                 run.cfg.verifier.seed,
                 {csv.filename().string(), svg.filename().string()});
  std::size_t unsafe = 0, unknown = 0;
  for (VerdictKind k : grid.verdicts) {
    if (k == VerdictKind::Unsafe) ++unsafe;
    if (k == VerdictKind::Unknown) ++unknown;
  }
  std::cout << "sweep: " << grid.verdicts.size() << " cells, " << unsafe
            << " unsafe, " << unknown << " unknown\n";
  return 0;
}

int cmd_simulate(const CommonOpts& opts, const std::vector<double>& d_over,
                 const std::vector<double>& r_over) {
  LoadedRun run = prepare(opts);
  const auto& scenario = run.cfg.scenario;
  ScenarioPoint point;
  point.n_cars = scenario.n_cars;
  point.v0 = scenario.v0;
  point.profiles = scenario.profiles;
  for (const Interval& iv : scenario.d_range) point.d.push_back(iv.mid());
  for (const Interval& iv : scenario.r_range) point.r.push_back(iv.mid());
  if (!d_over.empty()) {
    if (d_over.size() != point.d.size()) {
      throw ConfigError("--d needs one value per adjacent car pair");
    }
    point.d = d_over;
  }
  if (!r_over.empty()) {
    if (r_over.size() != point.r.size()) {
      throw ConfigError("--r needs one value per following car");
    }
    point.r = r_over;
  }
  point.check();

  Trace trace = simulate(point, run.cfg.verifier.tau, run.cfg.verifier.horizon);
  fs::path csv = run.out / "trace.csv";
  write_trace_csv(csv.string(), trace, point.layout());
  write_manifest((run.out / "manifest.json").string(), "simulate",
                 run.config_bytes, run.cfg.verifier.seed,
                 {csv.filename().string()});
  std::cout << "trace: " << trace.samples() << " samples -> " << csv.string()
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reachkit: simulation-driven reachability and risk analysis for "
               "multi-car emergency braking"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonOpts opts;
  std::vector<double> d_over, r_over;

  auto add_common = [&opts](CLI::App* cmd) {
    cmd->add_option("--config", opts.config_path, "run configuration (JSON)")
        ->required();
    cmd->add_option("--seed", opts.seed, "override the configured seed");
    cmd->add_option("--jobs", opts.jobs, "worker threads for grid runs");
    cmd->add_option("--out", opts.out_dir, "override the output directory");
  };

  CLI::App* verify = app.add_subcommand("verify", "prove the scenario safe or find a counterexample");
  add_common(verify);
  CLI::App* riskcmd = app.add_subcommand("risk", "verdict grid with probabilities and expected severity");
  add_common(riskcmd);
  CLI::App* sweep = app.add_subcommand("sweep", "verdict/severity grid without probabilities");
  add_common(sweep);
  CLI::App* sim = app.add_subcommand("simulate", "emit one trajectory as CSV");
  add_common(sim);
  sim->add_option("--d", d_over, "override separations (m)");
  sim->add_option("--r", r_over, "override reaction times (s)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(opts);
    if (riskcmd->parsed()) return cmd_risk(opts);
    if (sweep->parsed()) return cmd_sweep(opts);
    if (sim->parsed()) return cmd_simulate(opts, d_over, r_over);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
