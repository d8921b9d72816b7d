#pragma once

#include <cstdint>
#include <vector>

#include "reachkit/trace.hpp"
#include "reachkit/types.hpp"

namespace reachkit {

/// Exponential divergence bound for one state dimension: two trajectories
/// started a max-norm distance D apart stay within D * c * exp(gamma * t) of
/// each other in this coordinate.
struct DimBound {
  double c = 1.0;      // >= 1; at t = 0 the trajectories are the states themselves
  double gamma = 0.0;
};

struct DiscrepancyFn {
  std::vector<DimBound> per_dim;
  double horizon = 0.0;  // seconds the bound was fitted over

  std::size_t dim() const { return per_dim.size(); }
  double radius(std::size_t d, double dist, double t) const;
};

/// Accuracy / confidence pair for the sample-size bound.
struct PacParams {
  double epsilon = 0.05;           // tolerated fraction of violating initial states
  double confidence_delta = 0.01;  // probability the learned bound misses that target
};

/// ceil((1/epsilon) * ln(1/confidence_delta)), at least 1.
int required_samples(const PacParams& pac);

/// m points drawn uniformly from K with a deterministic seeded generator.
std::vector<Vec> sample_initial(const Box& k, int m, std::uint64_t seed);

/// Fit (c, gamma) for one state dimension from simulated traces: over every
/// trace pair and sample time, take the log of the per-dimension deviation
/// divided by the initial max-norm distance, and choose the dominating line
/// ln c + gamma * t that minimizes the integral of c * exp(gamma * t) over
/// the horizon. gamma is found by golden-section search (the objective is
/// convex in gamma once c is eliminated); c comes in closed form from the
/// binding constraint, clamped to >= 1.
DimBound learn(const std::vector<Trace>& traces, std::size_t dim);

DiscrepancyFn learn_all(const std::vector<Trace>& traces);

/// Known-Lipschitz fallback: c = 1, gamma = L in every dimension.
DiscrepancyFn lipschitz_discrepancy(std::size_t dim, double lipschitz,
                                    double horizon);

/// Fraction of trace pairs (all i < j) satisfying the bound at every sample
/// time and dimension.
double validate(const DiscrepancyFn& disc, const std::vector<Trace>& fresh);

/// Same check over an explicit pair list.
double validate_pairs(
    const DiscrepancyFn& disc,
    const std::vector<std::pair<const Trace*, const Trace*>>& pairs);

}  // namespace reachkit
