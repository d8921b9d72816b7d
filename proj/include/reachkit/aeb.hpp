#pragma once

#include <vector>

#include "reachkit/simulator.hpp"
#include "reachkit/trace.hpp"
#include "reachkit/types.hpp"
#include "reachkit/unsafe.hpp"
#include "reachkit/verifier.hpp"

namespace reachkit::aeb {

/// Multi-car braking scenario over parameter ranges: point initial
/// velocities, interval separations and reaction times, a braking profile per
/// car, and the separation threshold theta that defines a collision.
struct AebSpec {
  int n_cars = 2;
  std::vector<double> v0;
  std::vector<Interval> d_range;  // per adjacent pair, front to rear
  std::vector<Interval> r_range;  // per following car
  std::vector<BrakingProfile> profiles;
  double theta = 2.0;

  void check() const;
  StateLayout layout() const { return {n_cars}; }
};

struct ScenarioSet {
  Box initial;          // spans the d and r intervals; velocities and clock are points
  UnsafeSet unsafe;     // union over adjacent pairs of {s_front - s_rear <= theta}
  StateLayout layout;
};

/// Initial set, unsafe set and layout for the spec. For two cars the rear car
/// anchors at 0; for three the middle car anchors at 0 so that both
/// separation intervals map onto independent position dimensions (positions
/// are translation-invariant, so the anchor does not affect the dynamics).
ScenarioSet build_initial_set(const AebSpec& spec);

/// Trace generator over the scenario's joint state, for the verifier.
SimFn make_sim_fn(const AebSpec& spec);

/// Tube severity: worst over adjacent pairs of the relative-velocity bound at
/// separations within theta. scan_margin widens the scanned threshold to
/// theta + scan_margin; pass the verifier's boundary_margin so every cell it
/// refuses to discard also yields a severity value.
SeverityFn make_severity_fn(const AebSpec& spec, double scan_margin = 0.0);

/// Concrete scenario at a joint state drawn from the initial set.
ScenarioPoint scenario_from_state(const AebSpec& spec, const Vec& x);

struct OracleResult {
  bool collides = false;
  double collision_velocity = 0.0;  // relative, at the first theta crossing
  double min_separation = 0.0;      // over all adjacent pairs and times
};

/// Brute-force reference: dense fixed-step simulation (tau = 1 ms, same
/// integrator) with linear interpolation of the first theta crossing. Runs
/// until every car has stopped. Independent of the reachtube machinery.
OracleResult oracle(const ScenarioPoint& point, double theta);

/// Worst oracle collision velocity over a grid_n-per-varying-dimension grid
/// spanning the spec's d and r intervals (endpoints included).
double oracle_cell_max(const AebSpec& spec, int grid_n, int jobs = 1);

}  // namespace reachkit::aeb
