#include "reachkit/trace.hpp"

#include <stdexcept>

namespace reachkit {

Trace::Trace(double step, std::size_t dim, std::size_t samples)
    : step_(step), dim_(dim), samples_(samples),
      series_(dim, std::vector<double>(samples, 0.0)) {
  if (step <= 0.0) throw std::invalid_argument("Trace: step must be positive");
  if (samples < 1) throw std::invalid_argument("Trace: need at least one sample");
}

Vec Trace::state(std::size_t k) const {
  Vec x(dim_);
  for (std::size_t d = 0; d < dim_; ++d) x[d] = series_[d][k];
  return x;
}

void Trace::set_state(std::size_t k, const Vec& x) {
  if (x.size() != dim_) throw std::invalid_argument("Trace: state dim mismatch");
  for (std::size_t d = 0; d < dim_; ++d) series_[d][k] = x[d];
}

ReachTube::ReachTube(double step, std::size_t dim, std::size_t samples)
    : step_(step), dim_(dim), samples_(samples),
      lo_(dim, std::vector<double>(samples, 0.0)),
      hi_(dim, std::vector<double>(samples, 0.0)) {}

Box ReachTube::box(std::size_t k) const {
  Vec lo(dim_), hi(dim_);
  for (std::size_t d = 0; d < dim_; ++d) {
    lo[d] = lo_[d][k];
    hi[d] = hi_[d][k];
  }
  return Box(std::move(lo), std::move(hi));
}

bool ReachTube::contains(const Trace& t, double tol) const {
  if (t.dim() != dim_ || t.samples() != samples_) return false;
  for (std::size_t d = 0; d < dim_; ++d) {
    for (std::size_t k = 0; k < samples_; ++k) {
      double x = t.at(d, k);
      if (x < lo_[d][k] - tol || x > hi_[d][k] + tol) return false;
    }
  }
  return true;
}

}  // namespace reachkit
