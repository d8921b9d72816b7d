#pragma once

#include <vector>

#include "reachkit/discrepancy.hpp"
#include "reachkit/trace.hpp"

namespace reachkit {

/// Expand a trace into a reachtube: box k spans, per dimension i,
/// [x_i(t_k) - rho_i(t_k), x_i(t_k) + rho_i(t_k)] with
/// rho_i(t) = delta * c_i * exp(gamma_i * t).
ReachTube bloat_trace(const Trace& trace, const DiscrepancyFn& disc, double delta);

/// Unit radii c_i * exp(gamma_i * t_k) precomputed for a fixed step/horizon;
/// the verifier scales them by each cell's radius instead of re-evaluating
/// the exponentials per cell.
class BloatTable {
 public:
  BloatTable(const DiscrepancyFn& disc, double step, std::size_t samples);

  ReachTube apply(const Trace& trace, double delta) const;

  std::size_t dim() const { return base_.size(); }
  std::size_t samples() const { return samples_; }

 private:
  double step_ = 0.0;
  std::size_t samples_ = 0;
  std::vector<std::vector<double>> base_;  // [dim][sample]
};

}  // namespace reachkit
