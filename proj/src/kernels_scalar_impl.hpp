#pragma once

#include <cmath>
#include <cstddef>
#include <limits>

// Reference loops, included by both the scalar TU and (for remainder tails)
// the AVX2 TU. kmax/kmin mirror the VMAXPD/VMINPD tie rule: on a == b the
// second operand is returned, so +/-0 ties resolve identically in both paths.

namespace reachkit::kernels::detail {

inline double kmax(double a, double b) { return a > b ? a : b; }
inline double kmin(double a, double b) { return a < b ? a : b; }

inline void sub_loop(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] - b[k];
}

inline void axpy_loop(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) y[k] = y[k] + alpha * x[k];
}

inline void env_abs_ratio_loop(const double* a, const double* b, double scale,
                               double* env, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    double r = std::fabs(a[k] - b[k]) * scale;
    env[k] = kmax(env[k], r);
  }
}

inline void bloat_loop(const double* center, const double* base, double delta,
                       double* lo, double* hi, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    double r = delta * base[k];
    lo[k] = center[k] - r;
    hi[k] = center[k] + r;
  }
}

inline double max_shifted_loop(const double* y, const double* t, double gamma,
                               std::size_t n, double acc) {
  for (std::size_t k = 0; k < n; ++k) acc = kmax(acc, y[k] - gamma * t[k]);
  return acc;
}

inline double min_value_loop(const double* x, std::size_t n, double acc) {
  for (std::size_t k = 0; k < n; ++k) acc = kmin(acc, x[k]);
  return acc;
}

inline double max_value_loop(const double* x, std::size_t n, double acc) {
  for (std::size_t k = 0; k < n; ++k) acc = kmax(acc, x[k]);
  return acc;
}

inline double severity_scan_loop(const double* sep_lo, const double* rear_v_hi,
                                 const double* front_v_lo, double theta,
                                 std::size_t n, double acc) {
  const double ninf = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    double v = rear_v_hi[k] - front_v_lo[k];
    double m = (sep_lo[k] <= theta) ? v : ninf;
    acc = kmax(acc, m);
  }
  return acc;
}

}  // namespace reachkit::kernels::detail
