#include "reachkit/aeb.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "car_stepper.hpp"
#include "reachkit/parallel.hpp"

namespace reachkit::aeb {

void AebSpec::check() const {
  if (n_cars != 2 && n_cars != 3) {
    throw std::invalid_argument("AebSpec: n_cars must be 2 or 3");
  }
  std::size_t n = static_cast<std::size_t>(n_cars);
  if (v0.size() != n || profiles.size() != n || d_range.size() != n - 1 ||
      r_range.size() != n - 1) {
    throw std::invalid_argument("AebSpec: field lengths inconsistent with n_cars");
  }
  for (double v : v0) {
    if (!(v >= 0.0)) throw std::invalid_argument("AebSpec: v0 must be >= 0");
  }
  for (const Interval& iv : d_range) {
    if (!(iv.lo > 0.0) || !(iv.hi >= iv.lo)) {
      throw std::invalid_argument("AebSpec: separation ranges must be positive");
    }
  }
  for (const Interval& iv : r_range) {
    if (!(iv.lo >= 0.0) || !(iv.hi >= iv.lo)) {
      throw std::invalid_argument("AebSpec: reaction ranges must be non-negative");
    }
  }
  if (!(theta > 0.0)) throw std::invalid_argument("AebSpec: theta must be > 0");
  for (const auto& p : profiles) p.check();
}

ScenarioSet build_initial_set(const AebSpec& spec) {
  spec.check();
  StateLayout layout = spec.layout();
  Vec lo(layout.dim(), 0.0), hi(layout.dim(), 0.0);

  if (spec.n_cars == 2) {
    lo[layout.s(0)] = spec.d_range[0].lo;
    hi[layout.s(0)] = spec.d_range[0].hi;
    // rear car anchored at 0
  } else {
    // middle car anchored at 0: each separation interval becomes its own
    // position dimension instead of the rear-anchored sum d12 + d23
    lo[layout.s(0)] = spec.d_range[0].lo;
    hi[layout.s(0)] = spec.d_range[0].hi;
    lo[layout.s(2)] = -spec.d_range[1].hi;
    hi[layout.s(2)] = -spec.d_range[1].lo;
  }
  for (int car = 0; car < spec.n_cars; ++car) {
    lo[layout.v(car)] = hi[layout.v(car)] = spec.v0[static_cast<std::size_t>(car)];
  }
  for (int car = 1; car < spec.n_cars; ++car) {
    lo[layout.r(car)] = spec.r_range[static_cast<std::size_t>(car - 1)].lo;
    hi[layout.r(car)] = spec.r_range[static_cast<std::size_t>(car - 1)].hi;
  }

  std::vector<HalfSpace> constraints;
  for (int front = 0; front + 1 < spec.n_cars; ++front) {
    HalfSpace h;
    h.a.assign(layout.dim(), 0.0);
    h.a[layout.s(front)] = 1.0;
    h.a[layout.s(front + 1)] = -1.0;
    h.b = spec.theta;
    constraints.push_back(std::move(h));
  }
  return {Box(std::move(lo), std::move(hi)), UnsafeSet(std::move(constraints)),
          layout};
}

SimFn make_sim_fn(const AebSpec& spec) {
  spec.check();
  return [profiles = spec.profiles, layout = spec.layout()](
             const Vec& x0, double tau, double horizon) {
    return simulate_from_state(x0, profiles, layout, tau, horizon);
  };
}

SeverityFn make_severity_fn(const AebSpec& spec, double scan_margin) {
  spec.check();
  return [layout = spec.layout(), n = spec.n_cars,
          theta = spec.theta + scan_margin](const ReachTube& tube)
             -> std::optional<double> {
    std::optional<double> worst;
    for (int front = 0; front + 1 < n; ++front) {
      auto s = extract_severity(tube, layout.s(front), layout.v(front),
                                layout.s(front + 1), layout.v(front + 1), theta);
      if (s && (!worst || *s > *worst)) worst = s;
    }
    return worst;
  };
}

ScenarioPoint scenario_from_state(const AebSpec& spec, const Vec& x) {
  spec.check();
  StateLayout layout = spec.layout();
  if (x.size() != layout.dim()) {
    throw std::invalid_argument("scenario_from_state: dimension mismatch");
  }
  ScenarioPoint p;
  p.n_cars = spec.n_cars;
  p.profiles = spec.profiles;
  for (int car = 0; car < spec.n_cars; ++car) {
    p.v0.push_back(x[layout.v(car)]);
  }
  for (int front = 0; front + 1 < spec.n_cars; ++front) {
    p.d.push_back(x[layout.s(front)] - x[layout.s(front + 1)]);
  }
  for (int car = 1; car < spec.n_cars; ++car) {
    p.r.push_back(x[layout.r(car)]);
  }
  p.check();
  return p;
}

OracleResult oracle(const ScenarioPoint& point, double theta) {
  point.check();
  constexpr double kTau = 0.001;
  const StateLayout layout = point.layout();
  const int pairs = point.n_cars - 1;

  auto fill = [&](const Vec& x, std::vector<double>& sep, std::vector<double>& vrel) {
    for (int p = 0; p < pairs; ++p) {
      sep[static_cast<std::size_t>(p)] = x[layout.s(p)] - x[layout.s(p + 1)];
      vrel[static_cast<std::size_t>(p)] = x[layout.v(p + 1)] - x[layout.v(p)];
    }
  };

  Vec x0 = initial_state(point);
  std::vector<double> sep_prev(pairs), vrel_prev(pairs);
  std::vector<double> sep_now(pairs), vrel_now(pairs);
  fill(x0, sep_prev, vrel_prev);

  OracleResult result;
  result.min_separation = *std::min_element(sep_prev.begin(), sep_prev.end());
  if (result.min_separation <= theta) {
    int hit = static_cast<int>(std::min_element(sep_prev.begin(), sep_prev.end()) -
                               sep_prev.begin());
    result.collides = true;
    result.collision_velocity = std::max(0.0, vrel_prev[static_cast<std::size_t>(hit)]);
    return result;
  }

  // every car has braked and stopped by then
  double cap = 1.0;
  for (int car = 0; car < point.n_cars; ++car) {
    const auto& prof = point.profiles[static_cast<std::size_t>(car)];
    double brake = car == 0 ? 0.0 : point.r[static_cast<std::size_t>(car - 1)];
    cap = std::max(cap, brake + prof.ramp_s +
                            point.v0[static_cast<std::size_t>(car)] /
                                prof.peak_decel + 1.0);
  }

  detail::CarStepper stepper(x0, point.profiles, layout);
  double t = 0.0;
  while (t < cap) {
    stepper.advance(t, kTau);
    t += kTau;
    fill(stepper.state(), sep_now, vrel_now);

    int hit = -1;
    for (int p = 0; p < pairs; ++p) {
      double s = sep_now[static_cast<std::size_t>(p)];
      result.min_separation = std::min(result.min_separation, s);
      if (s <= theta && (hit < 0 || s < sep_now[static_cast<std::size_t>(hit)])) {
        hit = p;
      }
    }
    if (hit >= 0) {
      auto h = static_cast<std::size_t>(hit);
      double drop = sep_prev[h] - sep_now[h];
      double alpha = drop > 0.0 ? (sep_prev[h] - theta) / drop : 1.0;
      alpha = std::clamp(alpha, 0.0, 1.0);
      double v = vrel_prev[h] + alpha * (vrel_now[h] - vrel_prev[h]);
      result.collides = true;
      result.collision_velocity = std::max(0.0, v);
      return result;
    }

    sep_prev.swap(sep_now);
    vrel_prev.swap(vrel_now);
    if (stepper.all_stopped()) break;
  }
  return result;
}

double oracle_cell_max(const AebSpec& spec, int grid_n, int jobs) {
  spec.check();
  if (grid_n < 2) {
    throw std::invalid_argument("oracle_cell_max: grid_n must be >= 2");
  }

  struct Axis {
    bool is_d;
    std::size_t idx;
    Interval iv;
  };
  std::vector<Axis> axes;
  for (std::size_t i = 0; i < spec.d_range.size(); ++i) {
    if (!spec.d_range[i].degenerate()) axes.push_back({true, i, spec.d_range[i]});
  }
  for (std::size_t i = 0; i < spec.r_range.size(); ++i) {
    if (!spec.r_range[i].degenerate()) axes.push_back({false, i, spec.r_range[i]});
  }

  ScenarioPoint base;
  base.n_cars = spec.n_cars;
  base.v0 = spec.v0;
  base.profiles = spec.profiles;
  for (const Interval& iv : spec.d_range) base.d.push_back(iv.mid());
  for (const Interval& iv : spec.r_range) base.r.push_back(iv.mid());

  if (axes.empty()) {
    OracleResult r = oracle(base, spec.theta);
    return r.collides ? r.collision_velocity : 0.0;
  }

  std::size_t total = 1;
  for (std::size_t a = 0; a < axes.size(); ++a) {
    total *= static_cast<std::size_t>(grid_n);
  }

  std::vector<double> results(total, 0.0);
  parallel_for(total, jobs, [&](std::size_t n) {
    ScenarioPoint point = base;
    std::size_t rest = n;
    for (const Axis& ax : axes) {
      std::size_t gi = rest % static_cast<std::size_t>(grid_n);
      rest /= static_cast<std::size_t>(grid_n);
      double frac = static_cast<double>(gi) / static_cast<double>(grid_n - 1);
      double value = ax.iv.lo + frac * ax.iv.width();
      (ax.is_d ? point.d : point.r)[ax.idx] = value;
    }
    OracleResult r = oracle(point, spec.theta);
    results[n] = r.collides ? r.collision_velocity : 0.0;
  });
  return *std::max_element(results.begin(), results.end());
}

}  // namespace reachkit::aeb
