#include "reachkit/unsafe.hpp"

#include <stdexcept>

namespace reachkit {

UnsafeSet::UnsafeSet(std::vector<HalfSpace> cs) : constraints(std::move(cs)) {
  if (constraints.empty()) {
    throw std::invalid_argument("UnsafeSet: need at least one constraint");
  }
  std::size_t d = constraints.front().a.size();
  for (const auto& c : constraints) {
    if (c.a.size() != d) {
      throw std::invalid_argument("UnsafeSet: constraint dimension mismatch");
    }
  }
}

Interval dot_range(const Vec& a, const Box& box) {
  if (a.size() != box.dim()) {
    throw std::invalid_argument("dot_range: dimension mismatch");
  }
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] >= 0.0) {
      lo += a[i] * box.lo[i];
      hi += a[i] * box.hi[i];
    } else {
      lo += a[i] * box.hi[i];
      hi += a[i] * box.lo[i];
    }
  }
  return {lo, hi};
}

bool point_unsafe(const Vec& x, const UnsafeSet& u) {
  for (const auto& c : u.constraints) {
    if (c.a.size() != x.size()) {
      throw std::invalid_argument("point_unsafe: dimension mismatch");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += c.a[i] * x[i];
    if (s <= c.b) return true;
  }
  return false;
}

SetRelation box_hits_unsafe(const Box& box, const UnsafeSet& u) {
  bool disjoint = true;
  for (const auto& c : u.constraints) {
    Interval r = dot_range(c.a, box);
    if (r.hi <= c.b) return SetRelation::Contained;
    if (r.lo <= c.b) disjoint = false;
  }
  return disjoint ? SetRelation::Disjoint : SetRelation::Overlaps;
}

}  // namespace reachkit
