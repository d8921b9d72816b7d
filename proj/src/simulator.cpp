#include "reachkit/simulator.hpp"

#include <cmath>
#include <stdexcept>

#include "car_stepper.hpp"
#include "reachkit/kernels.hpp"

namespace reachkit {

BrakingProfile BrakingProfile::custom(double ramp, double peak) {
  BrakingProfile p{ramp, peak, ProfileLabel::Custom};
  p.check();
  return p;
}

BrakingProfile BrakingProfile::from_label(const std::string& name) {
  if (name == "mild") return mild();
  if (name == "medium") return medium();
  if (name == "hard") return hard();
  throw std::invalid_argument("unknown braking profile label: " + name);
}

void BrakingProfile::check() const {
  if (!(peak_decel > 0.0) || peak_decel > 12.0) {
    throw std::invalid_argument("BrakingProfile: peak_decel must be in (0, 12]");
  }
  if (ramp_s < 0.0 || ramp_s > 5.0) {
    throw std::invalid_argument("BrakingProfile: ramp_s must be in [0, 5]");
  }
}

std::string to_string(ProfileLabel label) {
  switch (label) {
    case ProfileLabel::Mild: return "mild";
    case ProfileLabel::Medium: return "medium";
    case ProfileLabel::Hard: return "hard";
    case ProfileLabel::Custom: return "custom";
  }
  return "custom";
}

void ScenarioPoint::check() const {
  if (n_cars != 2 && n_cars != 3) {
    throw std::invalid_argument("ScenarioPoint: n_cars must be 2 or 3");
  }
  std::size_t n = static_cast<std::size_t>(n_cars);
  if (v0.size() != n || profiles.size() != n || d.size() != n - 1 ||
      r.size() != n - 1) {
    throw std::invalid_argument(
        "ScenarioPoint: field lengths inconsistent with n_cars");
  }
  for (double vi : v0) {
    if (!(vi >= 0.0)) throw std::invalid_argument("ScenarioPoint: v0 must be >= 0");
  }
  for (double di : d) {
    if (!(di > 0.0)) {
      throw std::invalid_argument("ScenarioPoint: separations must be > 0");
    }
  }
  for (double ri : r) {
    if (!(ri >= 0.0)) {
      throw std::invalid_argument("ScenarioPoint: reaction times must be >= 0");
    }
  }
  for (const auto& p : profiles) p.check();
}

double car_decel(const BrakingProfile& profile, double t_since_brake, double v) {
  if (v <= 0.0 || t_since_brake < 0.0) return 0.0;
  if (profile.ramp_s == 0.0) return profile.peak_decel;
  double frac = t_since_brake / profile.ramp_s;
  return (frac < 1.0 ? frac : 1.0) * profile.peak_decel;
}

Vec initial_state(const ScenarioPoint& point) {
  point.check();
  StateLayout layout = point.layout();
  Vec x(layout.dim(), 0.0);
  // rear car at 0; car i sits at the sum of the separations behind it
  double pos = 0.0;
  for (int car = point.n_cars - 1; car >= 0; --car) {
    x[layout.s(car)] = pos;
    x[layout.v(car)] = point.v0[static_cast<std::size_t>(car)];
    if (car > 0) pos += point.d[static_cast<std::size_t>(car - 1)];
  }
  x[layout.clock()] = 0.0;
  for (int car = 1; car < point.n_cars; ++car) {
    x[layout.r(car)] = point.r[static_cast<std::size_t>(car - 1)];
  }
  return x;
}

std::size_t step_count(double tau, double horizon) {
  if (!(tau > 0.0)) throw std::invalid_argument("step_count: tau must be positive");
  if (!(horizon >= tau)) {
    throw std::invalid_argument("step_count: horizon must be >= tau");
  }
  double n = horizon / tau;
  auto rounded = static_cast<std::size_t>(std::llround(n));
  if (std::fabs(n - static_cast<double>(rounded)) > 1e-6 * n || rounded == 0) {
    throw std::invalid_argument("step_count: horizon must be a whole number of steps");
  }
  return rounded;
}

Trace simulate_from_state(const Vec& x0, const std::vector<BrakingProfile>& profiles,
                          const StateLayout& layout, double tau, double horizon) {
  const std::size_t steps = step_count(tau, horizon);
  if (!all_finite(x0)) {
    throw std::invalid_argument("simulate: initial state must be finite");
  }
  detail::CarStepper stepper(x0, profiles, layout);
  Trace trace(tau, layout.dim(), steps + 1);
  trace.set_state(0, x0);
  for (std::size_t k = 0; k < steps; ++k) {
    stepper.advance(static_cast<double>(k) * tau, tau);
    trace.set_state(k + 1, stepper.state());
  }
  return trace;
}

Trace simulate(const ScenarioPoint& point, double tau, double horizon) {
  return simulate_from_state(initial_state(point), point.profiles, point.layout(),
                             tau, horizon);
}

std::vector<double> separation(const Trace& trace, const StateLayout& layout,
                               int front_car, int rear_car) {
  if (front_car < 0 || rear_car < 0 || front_car >= layout.n_cars ||
      rear_car >= layout.n_cars) {
    throw std::invalid_argument("separation: car index out of range");
  }
  std::vector<double> out(trace.samples());
  kernels::sub(trace.series(layout.s(front_car)).data(),
               trace.series(layout.s(rear_car)).data(), out.data(), out.size());
  return out;
}

Trace integrate_rk4(const std::function<void(const Vec&, Vec&)>& f, const Vec& x0,
                    double tau, double horizon) {
  const std::size_t steps = step_count(tau, horizon);
  Trace trace(tau, x0.size(), steps + 1);
  trace.set_state(0, x0);
  Vec x = x0;
  Vec k1(x.size()), k2(x.size()), k3(x.size()), k4(x.size()), tmp(x.size());
  for (std::size_t k = 0; k < steps; ++k) {
    detail::rk4_step(f, x, tau, k1, k2, k3, k4, tmp);
    trace.set_state(k + 1, x);
  }
  return trace;
}

}  // namespace reachkit
