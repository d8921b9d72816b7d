// AVX2 kernel variants. This translation unit is compiled with -mavx2 and
// -ffp-contract=off; the dispatcher only routes here after a CPUID check.

#include "reachkit/kernels.hpp"

#if !defined(REACHKIT_NO_AVX2)

#include <immintrin.h>

#include <limits>

#include "kernels_scalar_impl.hpp"

namespace reachkit::kernels::avx2 {

using namespace reachkit::kernels::detail;

bool supported() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

namespace {

inline __m256d abs_pd(__m256d x) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  return _mm256_andnot_pd(sign, x);
}

inline double hmax_pd(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d m = _mm_max_pd(lo, hi);
  __m128d s = _mm_unpackhi_pd(m, m);
  return _mm_cvtsd_f64(_mm_max_sd(m, s));
}

inline double hmin_pd(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d m = _mm_min_pd(lo, hi);
  __m128d s = _mm_unpackhi_pd(m, m);
  return _mm_cvtsd_f64(_mm_min_sd(m, s));
}

}  // namespace

void sub(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d va = _mm256_loadu_pd(a + k);
    __m256d vb = _mm256_loadu_pd(b + k);
    _mm256_storeu_pd(out + k, _mm256_sub_pd(va, vb));
  }
  sub_loop(a + k, b + k, out + k, n - k);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d vx = _mm256_loadu_pd(x + k);
    __m256d vy = _mm256_loadu_pd(y + k);
    _mm256_storeu_pd(y + k, _mm256_add_pd(vy, _mm256_mul_pd(va, vx)));
  }
  axpy_loop(alpha, x + k, y + k, n - k);
}

void env_abs_ratio(const double* a, const double* b, double scale, double* env,
                   std::size_t n) {
  const __m256d vs = _mm256_set1_pd(scale);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d va = _mm256_loadu_pd(a + k);
    __m256d vb = _mm256_loadu_pd(b + k);
    __m256d r = _mm256_mul_pd(abs_pd(_mm256_sub_pd(va, vb)), vs);
    __m256d e = _mm256_loadu_pd(env + k);
    _mm256_storeu_pd(env + k, _mm256_max_pd(e, r));
  }
  env_abs_ratio_loop(a + k, b + k, scale, env + k, n - k);
}

void bloat(const double* center, const double* base, double delta, double* lo,
           double* hi, std::size_t n) {
  const __m256d vd = _mm256_set1_pd(delta);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d c = _mm256_loadu_pd(center + k);
    __m256d r = _mm256_mul_pd(vd, _mm256_loadu_pd(base + k));
    _mm256_storeu_pd(lo + k, _mm256_sub_pd(c, r));
    _mm256_storeu_pd(hi + k, _mm256_add_pd(c, r));
  }
  bloat_loop(center + k, base + k, delta, lo + k, hi + k, n - k);
}

double max_shifted(const double* y, const double* t, double gamma, std::size_t n) {
  const double ninf = -std::numeric_limits<double>::infinity();
  const __m256d vg = _mm256_set1_pd(gamma);
  __m256d acc = _mm256_set1_pd(ninf);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d vy = _mm256_loadu_pd(y + k);
    __m256d vt = _mm256_loadu_pd(t + k);
    acc = _mm256_max_pd(acc, _mm256_sub_pd(vy, _mm256_mul_pd(vg, vt)));
  }
  double m = hmax_pd(acc);
  return max_shifted_loop(y + k, t + k, gamma, n - k, m);
}

double min_value(const double* x, std::size_t n) {
  __m256d acc = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) acc = _mm256_min_pd(acc, _mm256_loadu_pd(x + k));
  return min_value_loop(x + k, n - k, hmin_pd(acc));
}

double max_value(const double* x, std::size_t n) {
  __m256d acc = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) acc = _mm256_max_pd(acc, _mm256_loadu_pd(x + k));
  return max_value_loop(x + k, n - k, hmax_pd(acc));
}

double severity_scan(const double* sep_lo, const double* rear_v_hi,
                     const double* front_v_lo, double theta, std::size_t n) {
  const double ninf = -std::numeric_limits<double>::infinity();
  const __m256d vtheta = _mm256_set1_pd(theta);
  const __m256d vninf = _mm256_set1_pd(ninf);
  __m256d acc = vninf;
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d sep = _mm256_loadu_pd(sep_lo + k);
    __m256d v = _mm256_sub_pd(_mm256_loadu_pd(rear_v_hi + k),
                              _mm256_loadu_pd(front_v_lo + k));
    __m256d mask = _mm256_cmp_pd(sep, vtheta, _CMP_LE_OQ);
    acc = _mm256_max_pd(acc, _mm256_blendv_pd(vninf, v, mask));
  }
  double m = hmax_pd(acc);
  return severity_scan_loop(sep_lo + k, rear_v_hi + k, front_v_lo + k, theta,
                            n - k, m);
}

}  // namespace reachkit::kernels::avx2

#endif  // !REACHKIT_NO_AVX2
