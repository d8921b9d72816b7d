#include "reachkit/kernels.hpp"

#include <limits>

#include "kernels_scalar_impl.hpp"

namespace reachkit::kernels::scalar {

using namespace reachkit::kernels::detail;

void sub(const double* a, const double* b, double* out, std::size_t n) {
  sub_loop(a, b, out, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  axpy_loop(alpha, x, y, n);
}

void env_abs_ratio(const double* a, const double* b, double scale, double* env,
                   std::size_t n) {
  env_abs_ratio_loop(a, b, scale, env, n);
}

void bloat(const double* center, const double* base, double delta, double* lo,
           double* hi, std::size_t n) {
  bloat_loop(center, base, delta, lo, hi, n);
}

double max_shifted(const double* y, const double* t, double gamma, std::size_t n) {
  return max_shifted_loop(y, t, gamma, n, -std::numeric_limits<double>::infinity());
}

double min_value(const double* x, std::size_t n) {
  return min_value_loop(x, n, std::numeric_limits<double>::infinity());
}

double max_value(const double* x, std::size_t n) {
  return max_value_loop(x, n, -std::numeric_limits<double>::infinity());
}

double severity_scan(const double* sep_lo, const double* rear_v_hi,
                     const double* front_v_lo, double theta, std::size_t n) {
  return severity_scan_loop(sep_lo, rear_v_hi, front_v_lo, theta, n,
                            -std::numeric_limits<double>::infinity());
}

}  // namespace reachkit::kernels::scalar
