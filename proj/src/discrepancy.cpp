#include "reachkit/discrepancy.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "reachkit/kernels.hpp"

namespace reachkit {

namespace {

constexpr double kLogFloor = 1e-12;  // floors deviations of numerically equal traces
constexpr double kGammaMax = 10.0;
constexpr double kGammaTol = 1e-4;

// ln of integral over [0, T] of exp(gamma * t), computed in log space so
// large gamma * T does not overflow.
double log_exp_integral(double gamma, double horizon) {
  double x = gamma * horizon;
  if (std::fabs(x) < 1e-12) return std::log(horizon);
  if (gamma > 0.0) {
    if (x > 700.0) return x + std::log1p(-std::exp(-x)) - std::log(gamma);
    return std::log(std::expm1(x)) - std::log(gamma);
  }
  return std::log(-std::expm1(x)) - std::log(-gamma);
}

struct Objective {
  const std::vector<double>& y;
  const std::vector<double>& t;
  double horizon;

  // ln c for a candidate gamma: the dominating line must clear every
  // (t_k, y_k) point, and c >= 1 because trajectories coincide with their
  // initial states at t = 0.
  double log_c(double gamma) const {
    double m = kernels::max_shifted(y.data(), t.data(), gamma, y.size());
    return m > 0.0 ? m : 0.0;
  }

  double log_cost(double gamma) const {
    return log_c(gamma) + log_exp_integral(gamma, horizon);
  }
};

double golden_section(const Objective& obj, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = obj.log_cost(x1);
  double f2 = obj.log_cost(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = obj.log_cost(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = obj.log_cost(x2);
    }
  }
  return 0.5 * (a + b);
}

void check_traces(const std::vector<Trace>& traces) {
  if (traces.size() < 2) {
    throw std::invalid_argument("learn: need at least 2 traces");
  }
  const Trace& t0 = traces.front();
  for (const Trace& t : traces) {
    if (t.dim() != t0.dim() || t.samples() != t0.samples() || t.step() != t0.step()) {
      throw std::invalid_argument("learn: traces must share step, horizon and dim");
    }
  }
}

}  // namespace

double DiscrepancyFn::radius(std::size_t d, double dist, double t) const {
  const DimBound& b = per_dim[d];
  return dist * (b.c * std::exp(b.gamma * t));
}

int required_samples(const PacParams& pac) {
  if (!(pac.epsilon > 0.0) || pac.epsilon > 1.0) {
    throw std::invalid_argument("required_samples: epsilon must be in (0, 1]");
  }
  if (!(pac.confidence_delta > 0.0) || !(pac.confidence_delta < 1.0)) {
    throw std::invalid_argument("required_samples: confidence_delta must be in (0, 1)");
  }
  double v = (1.0 / pac.epsilon) * std::log(1.0 / pac.confidence_delta);
  // small downward nudge so values that are integers up to rounding noise
  // do not get bumped a whole sample
  int m = static_cast<int>(std::ceil(v - 1e-9));
  return m < 1 ? 1 : m;
}

std::vector<Vec> sample_initial(const Box& k, int m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("sample_initial: m must be >= 1");
  std::mt19937_64 rng(seed);
  auto uniform01 = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
  };
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    Vec x(k.dim());
    for (std::size_t d = 0; d < k.dim(); ++d) {
      x[d] = k.lo[d] + uniform01() * k.width(d);
    }
    out.push_back(std::move(x));
  }
  return out;
}

DimBound learn(const std::vector<Trace>& traces, std::size_t dim) {
  check_traces(traces);
  const std::size_t n = traces.front().samples();
  const double tau = traces.front().step();
  const double horizon = traces.front().duration();

  // Upper envelope over all pairs of |xi_i(t)[dim] - xi_j(t)[dim]| / dist.
  std::vector<double> env(n, 0.0);
  double max_inv_dist = 0.0;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    for (std::size_t j = i + 1; j < traces.size(); ++j) {
      double dist = distance(traces[i].initial(), traces[j].initial(), Norm::Linf);
      if (dist == 0.0) {
        throw std::invalid_argument("learn: coincident initial states");
      }
      double inv = 1.0 / dist;
      if (inv > max_inv_dist) max_inv_dist = inv;
      kernels::env_abs_ratio(traces[i].series(dim).data(),
                             traces[j].series(dim).data(), inv, env.data(), n);
    }
  }

  std::vector<double> y(n), t(n);
  const double floor = kLogFloor * max_inv_dist;
  for (std::size_t k = 0; k < n; ++k) {
    y[k] = std::log(env[k] > floor ? env[k] : floor);
    t[k] = static_cast<double>(k) * tau;
  }

  Objective obj{y, t, horizon};
  double gamma = golden_section(obj, -kGammaMax, kGammaMax, kGammaTol);
  double c = std::exp(obj.log_c(gamma));
  if (c < 1.0) c = 1.0;
  return {c, gamma};
}

DiscrepancyFn learn_all(const std::vector<Trace>& traces) {
  check_traces(traces);
  DiscrepancyFn disc;
  disc.horizon = traces.front().duration();
  disc.per_dim.resize(traces.front().dim());
  for (std::size_t d = 0; d < disc.per_dim.size(); ++d) {
    disc.per_dim[d] = learn(traces, d);
  }
  return disc;
}

DiscrepancyFn lipschitz_discrepancy(std::size_t dim, double lipschitz,
                                    double horizon) {
  DiscrepancyFn disc;
  disc.horizon = horizon;
  disc.per_dim.assign(dim, DimBound{1.0, lipschitz});
  return disc;
}

namespace {

bool pair_holds(const DiscrepancyFn& disc, const Trace& a, const Trace& b) {
  double dist = distance(a.initial(), b.initial(), Norm::Linf);
  for (std::size_t d = 0; d < a.dim(); ++d) {
    const DimBound& bd = disc.per_dim[d];
    for (std::size_t k = 0; k < a.samples(); ++k) {
      double bound = dist * (bd.c * std::exp(bd.gamma * a.time(k)));
      double dev = std::fabs(a.at(d, k) - b.at(d, k));
      // tiny slack absorbs exp/log round-trip rounding on binding constraints
      if (dev > bound * (1.0 + 1e-9) + 1e-12) return false;
    }
  }
  return true;
}

}  // namespace

double validate(const DiscrepancyFn& disc, const std::vector<Trace>& fresh) {
  if (fresh.size() < 2) {
    throw std::invalid_argument("validate: need at least 2 traces");
  }
  std::vector<std::pair<const Trace*, const Trace*>> pairs;
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    for (std::size_t j = i + 1; j < fresh.size(); ++j) {
      pairs.emplace_back(&fresh[i], &fresh[j]);
    }
  }
  return validate_pairs(disc, pairs);
}

double validate_pairs(
    const DiscrepancyFn& disc,
    const std::vector<std::pair<const Trace*, const Trace*>>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("validate: no pairs");
  std::size_t ok = 0;
  for (const auto& [a, b] : pairs) {
    if (a->dim() != disc.dim()) {
      throw std::invalid_argument("validate: trace/discrepancy dim mismatch");
    }
    if (pair_holds(disc, *a, *b)) ++ok;
  }
  return static_cast<double>(ok) / static_cast<double>(pairs.size());
}

}  // namespace reachkit
