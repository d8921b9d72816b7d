#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "reachkit/types.hpp"

namespace reachkit {

/// Uniformly sampled trajectory. Sample k sits at time k * step; the time
/// series of each state dimension is stored contiguously so the array kernels
/// can stream it.
class Trace {
 public:
  Trace() = default;
  Trace(double step, std::size_t dim, std::size_t samples);

  double step() const { return step_; }
  std::size_t dim() const { return dim_; }
  std::size_t samples() const { return samples_; }  // N + 1
  double time(std::size_t k) const { return static_cast<double>(k) * step_; }
  double duration() const { return time(samples_ - 1); }

  double at(std::size_t d, std::size_t k) const { return series_[d][k]; }
  void set(std::size_t d, std::size_t k, double v) { series_[d][k] = v; }

  std::span<const double> series(std::size_t d) const { return series_[d]; }
  double* series_data(std::size_t d) { return series_[d].data(); }

  Vec state(std::size_t k) const;
  Vec initial() const { return state(0); }
  void set_state(std::size_t k, const Vec& x);

 private:
  double step_ = 0.0;
  std::size_t dim_ = 0;
  std::size_t samples_ = 0;
  std::vector<std::vector<double>> series_;  // [dim][sample]
};

/// Time-indexed sequence of boxes over-approximating the states reachable
/// from a neighborhood of the generating trace's initial state.
class ReachTube {
 public:
  ReachTube() = default;
  ReachTube(double step, std::size_t dim, std::size_t samples);

  double step() const { return step_; }
  std::size_t dim() const { return dim_; }
  std::size_t samples() const { return samples_; }
  double time(std::size_t k) const { return static_cast<double>(k) * step_; }

  std::span<const double> lo(std::size_t d) const { return lo_[d]; }
  std::span<const double> hi(std::size_t d) const { return hi_[d]; }
  double* lo_data(std::size_t d) { return lo_[d].data(); }
  double* hi_data(std::size_t d) { return hi_[d].data(); }

  Box box(std::size_t k) const;
  bool contains(const Trace& t, double tol = 0.0) const;

 private:
  double step_ = 0.0;
  std::size_t dim_ = 0;
  std::size_t samples_ = 0;
  std::vector<std::vector<double>> lo_, hi_;  // [dim][sample]
};

}  // namespace reachkit
