#pragma once

#include <functional>
#include <string>
#include <vector>

#include "reachkit/trace.hpp"
#include "reachkit/types.hpp"

namespace reachkit {

enum class ProfileLabel { Mild, Medium, Hard, Custom };

/// Deceleration ramps linearly from 0 to peak_decel over ramp_s seconds after
/// the brake engages, then holds the peak until the car stops.
struct BrakingProfile {
  double ramp_s = 0.8;
  double peak_decel = 5.0;  // m/s^2
  ProfileLabel label = ProfileLabel::Medium;

  static BrakingProfile mild() { return {1.0, 3.0, ProfileLabel::Mild}; }
  static BrakingProfile medium() { return {0.8, 5.0, ProfileLabel::Medium}; }
  static BrakingProfile hard() { return {0.5, 8.0, ProfileLabel::Hard}; }
  static BrakingProfile custom(double ramp, double peak);
  static BrakingProfile from_label(const std::string& name);

  void check() const;  // peak in (0, 12], ramp in [0, 5]
};

std::string to_string(ProfileLabel label);

/// Joint state layout: [s_1, v_1, ..., s_n, v_n, clock, r_2, ..., r_n].
/// Reaction times ride along as constant state dimensions so the initial set
/// can span them. Car indices are 0-based, car 0 is the lead (front) car.
struct StateLayout {
  int n_cars = 2;

  std::size_t dim() const { return static_cast<std::size_t>(3 * n_cars); }
  std::size_t s(int car) const { return static_cast<std::size_t>(2 * car); }
  std::size_t v(int car) const { return static_cast<std::size_t>(2 * car + 1); }
  std::size_t clock() const { return static_cast<std::size_t>(2 * n_cars); }
  /// Reaction-time slot of following car `car` (1-based among followers:
  /// car index 1..n-1 maps to slot car-1).
  std::size_t r(int car) const {
    return static_cast<std::size_t>(2 * n_cars + car);
  }
};

/// One concrete scenario: point values for everything.
struct ScenarioPoint {
  int n_cars = 2;
  std::vector<double> v0;                 // per car, m/s
  std::vector<double> d;                  // separations, d[0]=d_12, d[1]=d_23
  std::vector<double> r;                  // reaction times, r[0] for car 2, ...
  std::vector<BrakingProfile> profiles;   // per car

  void check() const;
  StateLayout layout() const { return {n_cars}; }
};

/// Deceleration while braking: min(1, t_since_brake / ramp) * peak, zero once
/// the car has stopped.
double car_decel(const BrakingProfile& profile, double t_since_brake, double v);

/// Initial joint state with the rear car at position 0.
Vec initial_state(const ScenarioPoint& point);

/// Integrate the joint car system from an arbitrary initial state. The lead
/// car brakes from t = 0; follower i brakes once clock >= its reaction-time
/// state. Fourth-order fixed-step integration, with steps split at the known
/// brake/ramp switch times and velocities clamped at 0 by interpolating the
/// crossing inside the step.
Trace simulate_from_state(const Vec& x0, const std::vector<BrakingProfile>& profiles,
                          const StateLayout& layout, double tau, double horizon);

Trace simulate(const ScenarioPoint& point, double tau, double horizon);

/// s_front(t_k) - s_rear(t_k) per sample time.
std::vector<double> separation(const Trace& trace, const StateLayout& layout,
                               int front_car, int rear_car);

/// Generic fixed-step RK4 over dx/dt = f(x); used by tests with simple flows.
Trace integrate_rk4(const std::function<void(const Vec&, Vec&)>& f, const Vec& x0,
                    double tau, double horizon);

/// Number of whole steps in the horizon; throws unless horizon is an integer
/// multiple of tau (within 1e-6 relative).
std::size_t step_count(double tau, double horizon);

}  // namespace reachkit
