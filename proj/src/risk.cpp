#include "reachkit/risk.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "reachkit/parallel.hpp"

namespace reachkit::risk {

namespace {

constexpr double kQuadTol = 1e-10;
constexpr double kRowTol = 1e-9;

double skew_normal_pdf(double x, double location, double scale, double shape) {
  double z = (x - location) / scale;
  double phi = std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
  double cdf = 0.5 * (1.0 + std::erf(shape * z / std::sqrt(2.0)));
  return 2.0 / scale * phi * cdf;
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double fa, double m, double fm, double b, double fb,
                        double whole, double tol, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (b <= a) return 0.0;
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, fa, m, fm, b, fb, whole, tol, 48);
}

}  // namespace

ParamDistribution ParamDistribution::skew_normal(double location, double scale,
                                                 double shape, Interval support) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("skew_normal: scale must be positive");
  }
  if (!(support.hi > support.lo)) {
    throw std::invalid_argument("skew_normal: empty support");
  }
  ParamDistribution d;
  d.kind_ = Kind::SkewNormal;
  d.support_ = support;
  d.location_ = location;
  d.scale_ = scale;
  d.shape_ = shape;
  d.norm_ = integrate(
      [&](double x) { return skew_normal_pdf(x, location, scale, shape); },
      support.lo, support.hi, 1e-12);
  if (!(d.norm_ > 0.0)) {
    throw std::invalid_argument("skew_normal: density vanishes on the support");
  }
  return d;
}

ParamDistribution ParamDistribution::table(
    std::vector<std::pair<Interval, double>> rows) {
  if (rows.empty()) throw std::invalid_argument("table: no rows");
  double sum = 0.0;
  double lo = rows.front().first.lo, hi = rows.front().first.hi;
  for (const auto& [iv, p] : rows) {
    if (!(p >= 0.0)) throw std::invalid_argument("table: negative probability");
    if (!(iv.hi >= iv.lo)) throw std::invalid_argument("table: bad interval");
    sum += p;
    lo = std::min(lo, iv.lo);
    hi = std::max(hi, iv.hi);
  }
  if (std::fabs(sum - 1.0) > kRowTol) {
    throw std::invalid_argument("table: row probabilities must sum to 1");
  }
  ParamDistribution d;
  d.kind_ = Kind::Table;
  d.support_ = {lo, hi};
  d.rows_ = std::move(rows);
  return d;
}

double ParamDistribution::cell_probability(const Interval& cell) const {
  if (cell.lo < support_.lo - kRowTol || cell.hi > support_.hi + kRowTol) {
    throw std::invalid_argument("cell_probability: interval outside support");
  }
  if (kind_ == Kind::Table) {
    for (const auto& [iv, p] : rows_) {
      if (std::fabs(iv.lo - cell.lo) <= kRowTol && std::fabs(iv.hi - cell.hi) <= kRowTol) {
        return p;
      }
    }
    throw std::invalid_argument("cell_probability: interval is not a table row");
  }
  double mass = integrate(
      [&](double x) { return skew_normal_pdf(x, location_, scale_, shape_); },
      std::max(cell.lo, support_.lo), std::min(cell.hi, support_.hi), kQuadTol);
  return mass / norm_;
}

double cell_probability(const ParamDistribution& dist, const Interval& cell) {
  return dist.cell_probability(cell);
}

double joint_probability(double p_d, double p_r) {
  if (p_d < 0.0 || p_d > 1.0 || p_r < 0.0 || p_r > 1.0) {
    throw std::invalid_argument("joint_probability: arguments must be in [0, 1]");
  }
  return p_d * p_r;
}

namespace {

std::vector<Interval> equal_partition(const Interval& range, std::size_t n) {
  std::vector<Interval> cells;
  cells.reserve(n);
  double w = range.width() / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    double lo = i == 0 ? range.lo : range.lo + w * static_cast<double>(i);
    double hi = i + 1 == n ? range.hi : range.lo + w * static_cast<double>(i + 1);
    cells.push_back({lo, hi});
  }
  return cells;
}

Interval axis_range(const aeb::AebSpec& spec, bool is_d, std::size_t idx) {
  const auto& ranges = is_d ? spec.d_range : spec.r_range;
  if (idx >= ranges.size()) {
    throw std::invalid_argument("build grid: axis index out of range");
  }
  return ranges[idx];
}

}  // namespace

VerdictGrid build_verdict_grid(const aeb::AebSpec& spec, std::size_t n_d,
                               std::size_t n_r, const VerifierConfig& cfg,
                               int jobs, const GridAxes& axes) {
  spec.check();
  cfg.check();
  if (n_d < 1 || n_r < 1) {
    throw std::invalid_argument("build grid: need at least one cell per axis");
  }

  VerdictGrid grid;
  grid.d_cells = equal_partition(axis_range(spec, axes.first_is_d, axes.first_idx), n_d);
  grid.r_cells = equal_partition(axis_range(spec, axes.second_is_d, axes.second_idx), n_r);
  grid.verdicts.assign(n_d * n_r, VerdictKind::Unknown);
  grid.severity.assign(n_d * n_r, 0.0);

  // One discrepancy for the whole parameter box, shared by every cell.
  SimFn sim = make_sim_fn(spec);
  aeb::ScenarioSet full = aeb::build_initial_set(spec);
  DiscrepancyFn disc;
  if (cfg.lipschitz) {
    disc = lipschitz_discrepancy(full.initial.dim(), *cfg.lipschitz, cfg.horizon);
  } else {
    std::vector<Vec> starts = sample_initial(full.initial, cfg.resolved_m(), cfg.seed);
    std::vector<Trace> traces;
    traces.reserve(starts.size());
    for (const Vec& x0 : starts) traces.push_back(sim(x0, cfg.tau, cfg.horizon));
    disc = learn_all(traces);
  }

  parallel_for(n_d * n_r, jobs, [&](std::size_t cell) {
    std::size_t i = cell / n_r, j = cell % n_r;
    aeb::AebSpec sub = spec;
    auto& first_ranges = axes.first_is_d ? sub.d_range : sub.r_range;
    auto& second_ranges = axes.second_is_d ? sub.d_range : sub.r_range;
    first_ranges[axes.first_idx] = grid.d_cells[i];
    second_ranges[axes.second_idx] = grid.r_cells[j];

    aeb::ScenarioSet set = aeb::build_initial_set(sub);
    Verdict v = verify(sim, set.initial, set.unsafe, disc, cfg,
                       aeb::make_severity_fn(sub, cfg.boundary_margin));
    grid.verdicts[cell] = v.kind;
    grid.severity[cell] =
        v.kind == VerdictKind::Safe ? 0.0 : v.severity_bound.value_or(0.0);
  });
  return grid;
}

RiskGrid build_risk_grid(const aeb::AebSpec& spec, std::size_t n_d,
                         std::size_t n_r, const ParamDistribution& d_dist,
                         const ParamDistribution& r_dist,
                         const VerifierConfig& cfg, int jobs) {
  RiskGrid out;
  out.grid = build_verdict_grid(spec, n_d, n_r, cfg, jobs);
  out.probability.assign(n_d * n_r, 0.0);
  std::vector<double> pd(n_d), pr(n_r);
  for (std::size_t i = 0; i < n_d; ++i) {
    pd[i] = d_dist.cell_probability(out.grid.d_cells[i]);
  }
  for (std::size_t j = 0; j < n_r; ++j) {
    pr[j] = r_dist.cell_probability(out.grid.r_cells[j]);
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n_d; ++i) {
    for (std::size_t j = 0; j < n_r; ++j) {
      double p = joint_probability(pd[i], pr[j]);
      out.probability[out.grid.at(i, j)] = p;
      total += p;
    }
  }
  if (std::fabs(total - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "build_risk_grid: distributions must cover exactly the gridded ranges");
  }
  return out;
}

double expected_severity(const RiskGrid& grid) {
  double e = 0.0;
  for (std::size_t n = 0; n < grid.probability.size(); ++n) {
    e += grid.probability[n] * grid.grid.severity[n];
  }
  return e;
}

}  // namespace reachkit::risk
