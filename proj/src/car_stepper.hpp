#pragma once

// Internal stepping core shared by the trace simulator and the dense oracle.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "reachkit/simulator.hpp"
#include "reachkit/types.hpp"

namespace reachkit::detail {

// Joint dynamics of one substep. Steps are split so that no brake or ramp
// switch falls inside a substep; the braking/moving state of each car is
// therefore constant over it and gets latched into the flags below, keeping
// the right-hand side smooth where the integrator samples it.
struct CarDynamics {
  const std::vector<BrakingProfile>* profiles = nullptr;
  StateLayout layout;
  const char* moving = nullptr;   // per car, v > 0 at substep start
  const char* braking = nullptr;  // per car, substep lies past the brake time

  double brake_time(const Vec& x, int car) const {
    return car == 0 ? 0.0 : x[layout.r(car)];
  }

  void operator()(const Vec& x, Vec& dx) const {
    std::fill(dx.begin(), dx.end(), 0.0);
    const double clock = x[layout.clock()];
    for (int car = 0; car < layout.n_cars; ++car) {
      if (!moving[car]) continue;
      dx[layout.s(car)] = x[layout.v(car)];
      if (braking[car]) {
        const auto& prof = (*profiles)[static_cast<std::size_t>(car)];
        double a = prof.peak_decel;
        if (prof.ramp_s > 0.0) {
          double since = clock - brake_time(x, car);
          if (since < 0.0) since = 0.0;
          double frac = since / prof.ramp_s;
          a = (frac < 1.0 ? frac : 1.0) * prof.peak_decel;
        }
        dx[layout.v(car)] = -a;
      }
    }
    dx[layout.clock()] = 1.0;
  }
};

template <typename Rhs>
inline void rk4_step(const Rhs& f, Vec& x, double h, Vec& k1, Vec& k2, Vec& k3,
                     Vec& k4, Vec& tmp) {
  const std::size_t n = x.size();
  f(x, k1);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
  f(tmp, k2);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
  f(tmp, k3);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
  f(tmp, k4);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
}

class CarStepper {
 public:
  CarStepper(const Vec& x0, const std::vector<BrakingProfile>& profiles,
             const StateLayout& layout)
      : x_(x0), k1_(x0.size()), k2_(x0.size()), k3_(x0.size()), k4_(x0.size()),
        tmp_(x0.size()),
        moving_(static_cast<std::size_t>(layout.n_cars), 0),
        braking_(static_cast<std::size_t>(layout.n_cars), 0) {
    dyn_.profiles = &profiles;
    dyn_.layout = layout;
    dyn_.moving = moving_.data();
    dyn_.braking = braking_.data();
    if (x0.size() != layout.dim()) {
      throw std::invalid_argument("simulate: state size does not match layout");
    }
    if (profiles.size() != static_cast<std::size_t>(layout.n_cars)) {
      throw std::invalid_argument("simulate: profile count does not match layout");
    }
    for (int car = 0; car < layout.n_cars; ++car) {
      double tb = dyn_.brake_time(x0, car);
      if (!(tb >= 0.0)) {
        throw std::invalid_argument("simulate: reaction times must be >= 0");
      }
      brake_times_.push_back(tb);
      kinks_.push_back(tb);
      double ramp = profiles[static_cast<std::size_t>(car)].ramp_s;
      if (ramp > 0.0) kinks_.push_back(tb + ramp);
    }
    std::sort(kinks_.begin(), kinks_.end());
  }

  const Vec& state() const { return x_; }
  StateLayout layout() const { return dyn_.layout; }

  void advance(double t, double tau) {
    double cur = t;
    const double end = t + tau;
    for (double e : kinks_) {
      if (e <= cur + 1e-12) continue;
      if (e >= end - 1e-12) break;
      substep(cur, e - cur);
      cur = e;
    }
    substep(cur, end - cur);
    if (!all_finite(x_)) {
      throw std::runtime_error("simulate: state became non-finite");
    }
  }

  bool all_stopped() const {
    for (int car = 0; car < dyn_.layout.n_cars; ++car) {
      if (x_[dyn_.layout.v(car)] > 0.0) return false;
    }
    return true;
  }

 private:
  void substep(double t, double h) {
    if (h <= 0.0) return;
    const StateLayout& L = dyn_.layout;
    const double mid = t + 0.5 * h;
    for (int car = 0; car < L.n_cars; ++car) {
      double v = x_[L.v(car)];
      moving_[static_cast<std::size_t>(car)] = v > 0.0 ? 1 : 0;
      braking_[static_cast<std::size_t>(car)] =
          mid >= brake_times_[static_cast<std::size_t>(car)] ? 1 : 0;
    }
    Vec before = x_;
    rk4_step(dyn_, x_, h, k1_, k2_, k3_, k4_, tmp_);
    for (int car = 0; car < L.n_cars; ++car) {
      std::size_t vi = L.v(car);
      std::size_t si = L.s(car);
      double v_pre = before[vi];
      double v_post = x_[vi];
      if (v_pre > 0.0 && v_post < 0.0) {
        // the car stops inside the substep: take the crossing time from the
        // linear velocity interpolant, and the matching quadratic position
        // advance (exact once the ramp has topped out)
        double alpha = v_pre / (v_pre - v_post);
        x_[si] = before[si] + 0.5 * v_pre * alpha * h;
        x_[vi] = 0.0;
      } else if (x_[vi] < 0.0 || x_[vi] == 0.0) {
        x_[vi] = 0.0;  // also normalizes -0
      }
    }
  }

  CarDynamics dyn_;
  Vec x_;
  Vec k1_, k2_, k3_, k4_, tmp_;
  std::vector<double> kinks_;
  std::vector<double> brake_times_;
  std::vector<char> moving_, braking_;
};

}  // namespace reachkit::detail
