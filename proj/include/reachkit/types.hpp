#pragma once

#include <cstddef>
#include <vector>

namespace reachkit {

/// Dense state vector; dimension is fixed per scenario.
using Vec = std::vector<double>;

enum class Norm { Linf, L2 };

bool all_finite(const Vec& v);

/// Norm of a - b. Throws std::invalid_argument on dimension mismatch.
double distance(const Vec& a, const Vec& b, Norm norm = Norm::Linf);

/// Closed interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return x >= lo && x <= hi; }
  bool degenerate() const { return hi == lo; }
};

/// Axis-aligned hyperrectangle. lo[i] <= hi[i] holds for every dimension.
struct Box {
  Vec lo;
  Vec hi;

  Box() = default;
  Box(Vec lower, Vec upper);  // validates bounds, throws on violation

  std::size_t dim() const { return lo.size(); }
  double width(std::size_t i) const { return hi[i] - lo[i]; }
  Vec center() const;

  /// Radius in the max norm: half the widest side.
  double max_half_width() const;

  /// Index of the widest dimension (ties broken by lowest index).
  std::size_t widest_dim() const;

  bool contains(const Vec& x, double tol = 0.0) const;
  double volume() const;
};

}  // namespace reachkit
