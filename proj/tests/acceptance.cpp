// Acceptance suite: one pass/fail line per criterion, prints a summary and
// exits non-zero if any criterion fails. Run from anywhere; the only external
// dependency is the CLI binary path baked in at build time (criterion 8).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "reachkit/aeb.hpp"
#include "reachkit/config.hpp"
#include "reachkit/outputs.hpp"
#include "reachkit/parallel.hpp"
#include "reachkit/risk.hpp"
#include "reachkit/verifier.hpp"

using namespace reachkit;
namespace fs = std::filesystem;

namespace {

constexpr int kJobs = 2;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof(buf), pattern, args);
  va_end(args);
  return buf;
}

// ---- shared scenario ------------------------------------------------------

aeb::AebSpec grid_spec(double v0) {
  aeb::AebSpec spec;
  spec.n_cars = 2;
  spec.v0 = {v0, v0};
  spec.d_range = {{40.0, 50.0}};
  spec.r_range = {{0.7, 2.4}};
  spec.profiles = {BrakingProfile::medium(), BrakingProfile::medium()};
  spec.theta = 2.0;
  return spec;
}

VerifierConfig grid_cfg() {
  VerifierConfig cfg;
  cfg.delta_cover = 0.5;
  cfg.max_refine_depth = 12;
  cfg.tau = 0.01;
  cfg.horizon = 20.0;
  cfg.pac = PacParams{0.05, 0.01};
  cfg.seed = 1;
  cfg.boundary_margin = 1e-3;
  return cfg;
}

aeb::AebSpec cell_spec(const aeb::AebSpec& spec, Interval d, Interval r) {
  aeb::AebSpec sub = spec;
  sub.d_range = {d};
  sub.r_range = {r};
  return sub;
}

// oracle worst case per grid cell, 20x20 sub-grid
std::vector<double> oracle_matrix(const aeb::AebSpec& spec,
                                  const risk::VerdictGrid& grid, int sub_n) {
  std::vector<double> out(grid.verdicts.size(), 0.0);
  parallel_for(out.size(), kJobs, [&](std::size_t n) {
    std::size_t i = n / grid.n_r(), j = n % grid.n_r();
    out[n] = aeb::oracle_cell_max(cell_spec(spec, grid.d_cells[i], grid.r_cells[j]),
                                  sub_n, 1);
  });
  return out;
}

// ---- criteria -------------------------------------------------------------

Outcome c1_pac_samples() {
  int a = required_samples({0.05, 0.01});
  int b = required_samples({0.1, 0.1});
  bool pass = a == 93 && b == 24;
  return {pass, fmt("required_samples(0.05,0.01)=%d (want 93), (0.1,0.1)=%d (want 24)", a, b)};
}

Outcome c2_risk_arithmetic() {
  auto d_dist = risk::ParamDistribution::table(
      {{{40, 41}, 0.11}, {{41, 42}, 0.19}, {{42, 43}, 0.16}, {{43, 44}, 0.13},
       {{44, 45}, 0.11}, {{45, 46}, 0.09}, {{46, 47}, 0.07}, {{47, 48}, 0.06},
       {{48, 49}, 0.05}, {{49, 50}, 0.03}});
  auto r_dist = risk::ParamDistribution::table(
      {{{0.7, 0.8}, 0.055}, {{0.8, 0.9}, 0.090}, {{0.9, 1.0}, 0.120},
       {{1.0, 1.1}, 0.139}, {{1.1, 1.2}, 0.130}, {{1.2, 1.3}, 0.110},
       {{1.3, 1.4}, 0.085}, {{1.4, 1.5}, 0.065}, {{1.5, 1.6}, 0.048},
       {{1.6, 1.7}, 0.038}, {{1.7, 1.8}, 0.030}, {{1.8, 1.9}, 0.030},
       {{1.9, 2.0}, 0.020}, {{2.0, 2.1}, 0.015}, {{2.1, 2.2}, 0.010},
       {{2.2, 2.3}, 0.008}, {{2.3, 2.4}, 0.007}});
  double pd = d_dist.cell_probability({41.0, 42.0});
  double pr = r_dist.cell_probability({1.0, 1.1});
  double joint = risk::joint_probability(pd, pr);
  bool pass = pd == 0.19 && pr == 0.139 && std::fabs(joint - 0.02641) <= 1e-12;
  return {pass, fmt("Pr(d in [41,42])=%.3f, Pr(r in [1.0,1.1])=%.3f, joint=%.10f", pd, pr, joint)};
}

Outcome c3_linear_recovery() {
  auto family = [](double rate) {
    std::vector<Trace> traces;
    for (int i = 1; i <= 10; ++i) {
      Trace t(0.01, 1, 501);
      for (std::size_t k = 0; k < 501; ++k) {
        t.set(0, k, 0.1 * i * std::exp(rate * t.time(k)));
      }
      traces.push_back(std::move(t));
    }
    return traces;
  };
  auto contracting = learn(family(-1.0), 0);
  auto expanding = learn(family(2.0), 0);
  bool pass = std::fabs(contracting.gamma + 1.0) <= 0.05 &&
              contracting.c >= 1.0 && contracting.c <= 1.05 &&
              std::fabs(expanding.gamma - 2.0) <= 0.05 && expanding.c >= 1.0 &&
              expanding.c <= 1.05;
  return {pass, fmt("dx=-x: (c=%.4f, g=%.4f); dx=2x: (c=%.4f, g=%.4f)",
                    contracting.c, contracting.gamma, expanding.c, expanding.gamma)};
}

Outcome c4_validation() {
  aeb::AebSpec spec = grid_spec(30.0);
  SimFn sim = aeb::make_sim_fn(spec);
  aeb::ScenarioSet set = aeb::build_initial_set(spec);
  VerifierConfig cfg = grid_cfg();
  const int m = required_samples({0.05, 0.01});

  int good_seeds = 0;
  double worst = 1.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto starts = sample_initial(set.initial, m, seed);
    std::vector<Trace> traces;
    for (const Vec& x : starts) traces.push_back(sim(x, cfg.tau, cfg.horizon));
    DiscrepancyFn disc = learn_all(traces);

    auto fresh_starts = sample_initial(set.initial, 100, seed + 1000);
    std::vector<Trace> fresh;
    for (const Vec& x : fresh_starts) fresh.push_back(sim(x, cfg.tau, cfg.horizon));
    std::vector<std::pair<const Trace*, const Trace*>> pairs;
    for (std::size_t i = 0; i + 1 < fresh.size(); i += 2) {
      pairs.emplace_back(&fresh[i], &fresh[i + 1]);
    }
    double frac = validate_pairs(disc, pairs);
    worst = std::min(worst, frac);
    if (frac >= 0.95) ++good_seeds;
  }
  return {good_seeds >= 9,
          fmt("m=%d: pass fraction >= 0.95 in %d/10 seeds (worst %.3f)", m,
              good_seeds, worst)};
}

struct GridRun {
  risk::VerdictGrid grid;
  std::vector<double> oracle;
};

GridRun run_grid(double v0, int sub_n) {
  aeb::AebSpec spec = grid_spec(v0);
  GridRun run;
  run.grid = risk::build_verdict_grid(spec, 10, 17, grid_cfg(), kJobs);
  run.oracle = oracle_matrix(spec, run.grid, sub_n);
  return run;
}

Outcome c5_soundness(const GridRun& run) {
  int safe_cells = 0, violations = 0, weak_bounds = 0;
  double worst_gap = 0.0;
  for (std::size_t n = 0; n < run.grid.verdicts.size(); ++n) {
    if (run.grid.verdicts[n] == VerdictKind::Safe) {
      ++safe_cells;
      if (run.oracle[n] != 0.0) ++violations;
    } else {
      double gap = run.grid.severity[n] - run.oracle[n];
      worst_gap = std::min(worst_gap, gap);
      if (gap < -0.05) ++weak_bounds;
    }
  }
  bool pass = violations == 0 && weak_bounds == 0;
  return {pass, fmt("%d safe cells, %d oracle violations; %d weak severity bounds "
                    "(worst margin %.3f m/s)",
                    safe_cells, violations, weak_bounds, worst_gap)};
}

int count_unsafe(const std::vector<double>& oracle) {
  int n = 0;
  for (double v : oracle) {
    if (v > 0.0) ++n;
  }
  return n;
}

// first all-safe cell of a d sweep at fixed r in [1.8, 1.9]
double minimal_safe_d(int n_cars, double v0, int sub_n) {
  for (int i = 0; i < 25; ++i) {
    Interval d{40.0 + i, 41.0 + i};
    aeb::AebSpec spec;
    spec.n_cars = n_cars;
    spec.v0.assign(static_cast<std::size_t>(n_cars), v0);
    spec.d_range.assign(static_cast<std::size_t>(n_cars - 1), d);
    spec.r_range.assign(static_cast<std::size_t>(n_cars - 1), {1.8, 1.9});
    spec.profiles.assign(static_cast<std::size_t>(n_cars),
                         BrakingProfile::medium());
    if (aeb::oracle_cell_max(spec, sub_n, kJobs) == 0.0) return d.lo;
  }
  return 1e9;
}

Outcome c6_frontier(const GridRun& run30) {
  // monotone in d (rows) and r (columns) on the oracle matrix
  const auto& g = run30.grid;
  int breaks = 0;
  for (std::size_t i = 0; i + 1 < g.n_d(); ++i) {
    for (std::size_t j = 0; j < g.n_r(); ++j) {
      if (run30.oracle[g.at(i + 1, j)] > run30.oracle[g.at(i, j)] + 1e-9) ++breaks;
    }
  }
  for (std::size_t i = 0; i < g.n_d(); ++i) {
    for (std::size_t j = 0; j + 1 < g.n_r(); ++j) {
      if (run30.oracle[g.at(i, j + 1)] < run30.oracle[g.at(i, j)] - 1e-9) ++breaks;
    }
  }

  GridRun run22 = run_grid(22.0, 20);
  GridRun run18 = run_grid(18.0, 20);
  int u30 = count_unsafe(run30.oracle);
  int u22 = count_unsafe(run22.oracle);
  int u18 = count_unsafe(run18.oracle);
  bool shrink = u30 > u22 && u22 > u18;

  double d2 = minimal_safe_d(2, 22.0, 20);
  double d3 = minimal_safe_d(3, 22.0, 6);
  bool chain = d3 >= d2 && d2 < 1e9 && d3 < 1e9;

  bool pass = breaks == 0 && shrink && chain;
  return {pass, fmt("monotonicity breaks=%d; unsafe cells 30/22/18 m/s: %d/%d/%d; "
                    "minimal safe d: 2-car %.0f m, 3-car %.0f m",
                    breaks, u30, u22, u18, d2, d3)};
}

Outcome c7_tube_containment() {
  aeb::AebSpec spec = grid_spec(30.0);
  SimFn sim = aeb::make_sim_fn(spec);
  VerifierConfig cfg = grid_cfg();

  // representative cells spanning safe, frontier and unsafe territory
  const std::pair<Interval, Interval> picks[] = {
      {{49.0, 50.0}, {0.7, 0.8}},  {{44.0, 45.0}, {1.5, 1.6}},
      {{43.0, 44.0}, {1.4, 1.5}},  {{40.0, 41.0}, {2.3, 2.4}},
      {{46.0, 47.0}, {1.9, 2.0}},  {{45.0, 46.0}, {1.4, 1.5}},
      {{46.0, 47.0}, {1.5, 1.6}},  {{41.0, 42.0}, {1.0, 1.1}},
  };

  std::mt19937_64 rng(2026);
  auto uniform01 = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  long trials = 0, contained = 0;
  for (const auto& [d, r] : picks) {
    aeb::AebSpec sub = cell_spec(spec, d, r);
    aeb::ScenarioSet set = aeb::build_initial_set(sub);

    // train on the cell and collect the final partition's leaves
    std::vector<Box> leaves;
    CellObserver collect = [&leaves](const CellOutcome& c) {
      if (c.kind != CellOutcome::Refined) leaves.push_back(c.box);
    };
    auto [disc, verdict] = train_and_verify(sim, set.initial, set.unsafe,
                                            cfg, aeb::make_severity_fn(sub), collect);
    (void)verdict;

    // spread the sampling over at most 8 leaves per cell
    std::size_t stride = std::max<std::size_t>(1, leaves.size() / 8);
    for (std::size_t li = 0; li < leaves.size(); li += stride) {
      const Box& cell = leaves[li];
      Trace center = sim(cell.center(), cfg.tau, cfg.horizon);
      ReachTube tube = bloat_trace(center, disc, cell.max_half_width());
      for (int p = 0; p < 100; ++p) {
        Vec x(cell.dim());
        for (std::size_t dd = 0; dd < cell.dim(); ++dd) {
          x[dd] = cell.lo[dd] + uniform01() * cell.width(dd);
        }
        ++trials;
        if (tube.contains(sim(x, cfg.tau, cfg.horizon), 1e-9)) ++contained;
      }
    }
  }
  double rate = static_cast<double>(contained) / static_cast<double>(trials);
  return {rate >= 0.99, fmt("%ld/%ld trajectories inside their cell tube (%.2f%%)",
                            contained, trials, rate * 100.0)};
}

Outcome c8_cli_determinism() {
  fs::path dir = fs::temp_directory_path() / "reachkit_acceptance_c8";
  fs::remove_all(dir);
  fs::create_directories(dir);

  std::string config = R"({
  "scenario": {
    "n_cars": 2, "v0": [30.0, 30.0], "d": [[40.0, 50.0]], "r": [[0.7, 2.4]],
    "profiles": ["medium", "medium"], "theta": 2.0
  },
  "verifier": {
    "delta_cover": 0.5, "max_refine_depth": 10, "tau": 0.01, "T": 20.0,
    "seed": 7, "m_train": 40
  },
  "risk": {
    "n_d": 4, "n_r": 4,
    "d_dist": {"kind": "skew_normal", "location": 42.0, "scale": 2.5,
               "shape": 3.0, "support": [40.0, 50.0]},
    "r_dist": {"kind": "skew_normal", "location": 1.0, "scale": 0.35,
               "shape": 2.0, "support": [0.7, 2.4]}
  },
  "outputs": "unused"
})";
  fs::path cfg_path = dir / "risk.json";
  {
    std::ofstream out(cfg_path);
    out << config;
  }
  auto run = [&](const std::string& out_dir) {
    std::string cmd = std::string(REACHKIT_CLI_PATH) + " risk --config " +
                      cfg_path.string() + " --jobs 2 --out " + out_dir +
                      " > /dev/null";
    return std::system(cmd.c_str());
  };
  int rc1 = run((dir / "a").string());
  int rc2 = run((dir / "b").string());

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::string csv_a = slurp(dir / "a" / "heatmap.csv");
  std::string svg_a = slurp(dir / "a" / "heatmap.svg");
  bool same_csv = !csv_a.empty() && csv_a == slurp(dir / "b" / "heatmap.csv");
  bool same_svg = !svg_a.empty() && svg_a == slurp(dir / "b" / "heatmap.svg");
  bool pass = rc1 == 0 && rc2 == 0 && same_csv && same_svg;
  fs::remove_all(dir);
  return {pass, fmt("two seeded runs: exit %d/%d, CSV identical=%s, SVG identical=%s",
                    rc1, rc2, same_csv ? "yes" : "no", same_svg ? "yes" : "no")};
}

Outcome c9_counterexample_replay(const GridRun& run30) {
  aeb::AebSpec spec = grid_spec(30.0);
  SimFn sim = aeb::make_sim_fn(spec);
  VerifierConfig cfg = grid_cfg();

  // shared discrepancy as in the grid build
  aeb::ScenarioSet full = aeb::build_initial_set(spec);
  auto starts = sample_initial(full.initial, cfg.resolved_m(), cfg.seed);
  std::vector<Trace> traces;
  for (const Vec& x : starts) traces.push_back(sim(x, cfg.tau, cfg.horizon));
  DiscrepancyFn disc = learn_all(traces);

  long unsafe_cells = 0, replayed = 0;
  const auto& g = run30.grid;
  for (std::size_t n = 0; n < g.verdicts.size(); ++n) {
    if (g.verdicts[n] != VerdictKind::Unsafe) continue;
    ++unsafe_cells;
    std::size_t i = n / g.n_r(), j = n % g.n_r();
    aeb::AebSpec sub = cell_spec(spec, g.d_cells[i], g.r_cells[j]);
    aeb::ScenarioSet set = aeb::build_initial_set(sub);
    Verdict v = verify(sim, set.initial, set.unsafe, disc, cfg,
                       aeb::make_severity_fn(sub, cfg.boundary_margin));
    if (v.kind != VerdictKind::Unsafe || !v.counterexample) continue;
    Trace replay = sim(v.counterexample->initial_state, cfg.tau, cfg.horizon);
    auto sep = separation(replay, sub.layout(), 0, 1);
    bool hit = false;
    for (double s : sep) {
      if (s <= sub.theta) {
        hit = true;
        break;
      }
    }
    if (hit) ++replayed;
  }
  bool pass = unsafe_cells > 0 && replayed == unsafe_cells;
  return {pass, fmt("%ld/%ld unsafe cells produced a replayable collision trace",
                    replayed, unsafe_cells)};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
  }

  struct Entry {
    int id;
    const char* name;
    Outcome outcome;
    double seconds;
  };
  std::vector<Entry> entries;
  GridRun run30;
  bool have_run30 = false;

  auto ensure_run30 = [&]() {
    if (!have_run30) {
      run30 = run_grid(30.0, 20);
      have_run30 = true;
    }
  };

  auto run = [&](int id, const char* name, auto fn) {
    if (only != 0 && only != id) return;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = fn();
    auto t1 = std::chrono::steady_clock::now();
    entries.push_back({id, name, o, std::chrono::duration<double>(t1 - t0).count()});
    std::printf("[%s] %d. %s — %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, name,
                o.detail.c_str(), entries.back().seconds);
    std::fflush(stdout);
  };

  run(1, "PAC sample size", c1_pac_samples);
  run(2, "risk arithmetic", c2_risk_arithmetic);
  run(3, "discrepancy recovery on linear systems", c3_linear_recovery);
  run(4, "discrepancy validation on the 2-car system", c4_validation);
  run(5, "verifier soundness vs oracle on the 10x17 grid", [&] {
    ensure_run30();
    return c5_soundness(run30);
  });
  run(6, "qualitative frontier properties", [&] {
    ensure_run30();
    return c6_frontier(run30);
  });
  run(7, "tube containment", c7_tube_containment);
  run(8, "CLI determinism", c8_cli_determinism);
  run(9, "counterexample replay", [&] {
    ensure_run30();
    return c9_counterexample_replay(run30);
  });

  int passed = 0;
  for (const Entry& e : entries) {
    if (e.outcome.pass) ++passed;
  }
  std::printf("ACCEPTANCE: %d/%zu criteria passed\n", passed, entries.size());
  return passed == static_cast<int>(entries.size()) ? 0 : 1;
}
