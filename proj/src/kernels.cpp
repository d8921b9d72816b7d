#include "reachkit/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace reachkit::kernels {

namespace {

struct Table {
  const char* name;
  void (*sub)(const double*, const double*, double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*env_abs_ratio)(const double*, const double*, double, double*, std::size_t);
  void (*bloat)(const double*, const double*, double, double*, double*, std::size_t);
  double (*max_shifted)(const double*, const double*, double, std::size_t);
  double (*min_value)(const double*, std::size_t);
  double (*max_value)(const double*, std::size_t);
  double (*severity_scan)(const double*, const double*, const double*, double,
                          std::size_t);
};

constexpr Table kScalar = {
    "scalar",        scalar::sub,       scalar::axpy,      scalar::env_abs_ratio,
    scalar::bloat,   scalar::max_shifted, scalar::min_value, scalar::max_value,
    scalar::severity_scan,
};

#if !defined(REACHKIT_NO_AVX2)
constexpr Table kAvx2 = {
    "avx2",        avx2::sub,         avx2::axpy,      avx2::env_abs_ratio,
    avx2::bloat,   avx2::max_shifted, avx2::min_value, avx2::max_value,
    avx2::severity_scan,
};
#endif

const Table* pick() {
#if !defined(REACHKIT_NO_AVX2)
  if (std::getenv("REACHKIT_DISABLE_AVX2") == nullptr && avx2::supported()) {
    return &kAvx2;
  }
#endif
  return &kScalar;
}

std::atomic<const Table*>& active() {
  static std::atomic<const Table*> t{pick()};
  return t;
}

}  // namespace

const char* active_isa() { return active().load()->name; }

void force_scalar(bool on) { active().store(on ? &kScalar : pick()); }

void sub(const double* a, const double* b, double* out, std::size_t n) {
  active().load()->sub(a, b, out, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  active().load()->axpy(alpha, x, y, n);
}

void env_abs_ratio(const double* a, const double* b, double scale, double* env,
                   std::size_t n) {
  active().load()->env_abs_ratio(a, b, scale, env, n);
}

void bloat(const double* center, const double* base, double delta, double* lo,
           double* hi, std::size_t n) {
  active().load()->bloat(center, base, delta, lo, hi, n);
}

double max_shifted(const double* y, const double* t, double gamma, std::size_t n) {
  return active().load()->max_shifted(y, t, gamma, n);
}

double min_value(const double* x, std::size_t n) {
  return active().load()->min_value(x, n);
}

double max_value(const double* x, std::size_t n) {
  return active().load()->max_value(x, n);
}

double severity_scan(const double* sep_lo, const double* rear_v_hi,
                     const double* front_v_lo, double theta, std::size_t n) {
  return active().load()->severity_scan(sep_lo, rear_v_hi, front_v_lo, theta, n);
}

}  // namespace reachkit::kernels
