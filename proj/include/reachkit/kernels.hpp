#pragma once

#include <cstddef>

// Inner-loop array kernels shared by the tube, discrepancy and verifier code.
//
// Every kernel is either purely elementwise or a min/max reduction, so the
// scalar reference and the SIMD variants return identical values (min/max of
// doubles is exact and order-insensitive; the elementwise arithmetic performs
// the same operations per element, and the kernel translation units are built
// with FP contraction off). The equivalence suite asserts this.

namespace reachkit::kernels {

/// out[k] = a[k] - b[k]
void sub(const double* a, const double* b, double* out, std::size_t n);

/// y[k] += alpha * x[k]
void axpy(double alpha, const double* x, double* y, std::size_t n);

/// env[k] = max(env[k], |a[k] - b[k]| * scale)
void env_abs_ratio(const double* a, const double* b, double scale, double* env,
                   std::size_t n);

/// lo[k] = center[k] - delta * base[k];  hi[k] = center[k] + delta * base[k]
void bloat(const double* center, const double* base, double delta, double* lo,
           double* hi, std::size_t n);

/// max over k of (y[k] - gamma * t[k]); -inf for n == 0
double max_shifted(const double* y, const double* t, double gamma, std::size_t n);

double min_value(const double* x, std::size_t n);  // +inf for n == 0
double max_value(const double* x, std::size_t n);  // -inf for n == 0

/// max over all k with sep_lo[k] <= theta of (rear_v_hi[k] - front_v_lo[k]);
/// -inf if no index qualifies.
double severity_scan(const double* sep_lo, const double* rear_v_hi,
                     const double* front_v_lo, double theta, std::size_t n);

/// Name of the backend selected at startup: "avx2" or "scalar".
const char* active_isa();

/// Force the scalar backend (testing hook). The REACHKIT_DISABLE_AVX2
/// environment variable has the same effect.
void force_scalar(bool on);

namespace scalar {
void sub(const double* a, const double* b, double* out, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void env_abs_ratio(const double* a, const double* b, double scale, double* env,
                   std::size_t n);
void bloat(const double* center, const double* base, double delta, double* lo,
           double* hi, std::size_t n);
double max_shifted(const double* y, const double* t, double gamma, std::size_t n);
double min_value(const double* x, std::size_t n);
double max_value(const double* x, std::size_t n);
double severity_scan(const double* sep_lo, const double* rear_v_hi,
                     const double* front_v_lo, double theta, std::size_t n);
}  // namespace scalar

#if !defined(REACHKIT_NO_AVX2)
namespace avx2 {
bool supported();  // runtime CPUID check
void sub(const double* a, const double* b, double* out, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void env_abs_ratio(const double* a, const double* b, double scale, double* env,
                   std::size_t n);
void bloat(const double* center, const double* base, double delta, double* lo,
           double* hi, std::size_t n);
double max_shifted(const double* y, const double* t, double gamma, std::size_t n);
double min_value(const double* x, std::size_t n);
double max_value(const double* x, std::size_t n);
double severity_scan(const double* sep_lo, const double* rear_v_hi,
                     const double* front_v_lo, double theta, std::size_t n);
}  // namespace avx2
#endif

}  // namespace reachkit::kernels
