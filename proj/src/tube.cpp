#include "reachkit/tube.hpp"

#include <cmath>
#include <stdexcept>

#include "reachkit/kernels.hpp"

namespace reachkit {

namespace {

void check_bloat_args(std::size_t trace_dim, std::size_t disc_dim, double delta) {
  if (trace_dim != disc_dim) {
    throw std::invalid_argument("bloat_trace: trace/discrepancy dim mismatch");
  }
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("bloat_trace: delta must be finite and non-negative");
  }
}

}  // namespace

ReachTube bloat_trace(const Trace& trace, const DiscrepancyFn& disc, double delta) {
  check_bloat_args(trace.dim(), disc.dim(), delta);
  BloatTable table(disc, trace.step(), trace.samples());
  return table.apply(trace, delta);
}

BloatTable::BloatTable(const DiscrepancyFn& disc, double step, std::size_t samples)
    : step_(step), samples_(samples),
      base_(disc.dim(), std::vector<double>(samples, 0.0)) {
  for (std::size_t d = 0; d < disc.dim(); ++d) {
    const DimBound& b = disc.per_dim[d];
    for (std::size_t k = 0; k < samples; ++k) {
      double t = static_cast<double>(k) * step;
      base_[d][k] = b.c * std::exp(b.gamma * t);
    }
  }
}

ReachTube BloatTable::apply(const Trace& trace, double delta) const {
  check_bloat_args(trace.dim(), base_.size(), delta);
  if (trace.samples() != samples_ || trace.step() != step_) {
    throw std::invalid_argument("BloatTable: trace grid mismatch");
  }
  ReachTube tube(step_, trace.dim(), samples_);
  for (std::size_t d = 0; d < trace.dim(); ++d) {
    kernels::bloat(trace.series(d).data(), base_[d].data(), delta,
                   tube.lo_data(d), tube.hi_data(d), samples_);
  }
  return tube;
}

}  // namespace reachkit
