#include "reachkit/types.hpp"

#include <cmath>
#include <stdexcept>

namespace reachkit {

bool all_finite(const Vec& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

double distance(const Vec& a, const Vec& b, Norm norm) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("distance: dimension mismatch");
  }
  if (norm == Norm::Linf) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      double d = std::fabs(a[i] - b[i]);
      if (d > m) m = d;
    }
    return m;
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Box::Box(Vec lower, Vec upper) : lo(std::move(lower)), hi(std::move(upper)) {
  if (lo.size() != hi.size()) {
    throw std::invalid_argument("Box: lo/hi dimension mismatch");
  }
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (!(lo[i] <= hi[i])) {
      throw std::invalid_argument("Box: lo > hi in dimension " + std::to_string(i));
    }
  }
}

Vec Box::center() const {
  Vec c(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) c[i] = 0.5 * (lo[i] + hi[i]);
  return c;
}

double Box::max_half_width() const {
  double m = 0.0;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    double h = 0.5 * (hi[i] - lo[i]);
    if (h > m) m = h;
  }
  return m;
}

std::size_t Box::widest_dim() const {
  std::size_t best = 0;
  double w = -1.0;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (width(i) > w) {
      w = width(i);
      best = i;
    }
  }
  return best;
}

bool Box::contains(const Vec& x, double tol) const {
  if (x.size() != lo.size()) return false;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (x[i] < lo[i] - tol || x[i] > hi[i] + tol) return false;
  }
  return true;
}

double Box::volume() const {
  double v = 1.0;
  for (std::size_t i = 0; i < lo.size(); ++i) v *= width(i);
  return v;
}

}  // namespace reachkit
