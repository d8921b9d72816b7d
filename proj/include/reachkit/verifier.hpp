#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "reachkit/cover.hpp"
#include "reachkit/discrepancy.hpp"
#include "reachkit/trace.hpp"
#include "reachkit/tube.hpp"
#include "reachkit/unsafe.hpp"

namespace reachkit {

struct VerifierConfig {
  double delta_cover = 0.5;   // initial cover radius
  int max_refine_depth = 12;  // cells at this depth stop refining
  double tau = 0.01;
  double horizon = 20.0;
  std::optional<int> m_train;       // explicit training trace count...
  std::optional<PacParams> pac;     // ...or derived from a PAC target
  std::uint64_t seed = 1;
  // Added to the unsafe offsets in the tube-disjointness test only. Covers
  // excursions between sample times; a Safe verdict then also holds for the
  // continuous-time trajectories, not just the sampled ones.
  double boundary_margin = 0.0;
  std::optional<double> lipschitz;  // skip learning, use c=1, gamma=L

  int resolved_m() const;
  void check() const;
};

enum class VerdictKind { Safe, Unsafe, Unknown };

const char* to_string(VerdictKind k);

struct Counterexample {
  Vec initial_state;
  Trace trace;
  std::size_t first_unsafe_sample = 0;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<Counterexample> counterexample;  // present iff Unsafe
  std::optional<double> severity_bound;          // absent when Safe
  long cells_processed = 0;
  int max_depth_reached = 0;
};

/// Black-box trajectory generator: full-state start, sample step, horizon.
using SimFn = std::function<Trace(const Vec&, double, double)>;

/// Scenario-specific severity read-out over one tube (absent when the tube
/// never meets the unsafe region).
using SeverityFn = std::function<std::optional<double>(const ReachTube&)>;

/// Over sample times where the separation interval's lower bound is at most
/// theta, the largest rear-upper minus front-lower velocity, clamped at 0.
/// Absent if the separation never reaches theta.
std::optional<double> extract_severity(const ReachTube& tube,
                                       std::size_t front_s, std::size_t front_v,
                                       std::size_t rear_s, std::size_t rear_v,
                                       double theta);

struct CellOutcome {
  enum Kind { Discarded, Refined, DepthCapped, FoundCounterexample, SeveritySweep };
  Box box;
  int depth = 0;
  Kind kind = Discarded;
};

using CellObserver = std::function<void(const CellOutcome&)>;

/// Cover-and-refine reachability check of the system generated by `sim` from
/// initial set K against unsafe set U:
///   - simulate each cover cell's center and expand it by the cell radius
///     through the discrepancy bound;
///   - a tube disjoint from U discards the cell;
///   - a center trace entering U is a concrete counterexample (Unsafe);
///   - anything else splits the cell until the depth cap (then Unknown).
/// Safe means every cell was discarded. The severity bound aggregates over
/// the final partition's leaf tubes that meet U, so it upper-bounds any
/// collision reachable from K even when the search stops at the first
/// counterexample.
Verdict verify(const SimFn& sim, const Box& K, const UnsafeSet& U,
               const DiscrepancyFn& disc, const VerifierConfig& cfg,
               const SeverityFn& severity = {}, const CellObserver& observer = {});

/// sample -> simulate -> learn -> verify, returning both products.
std::pair<DiscrepancyFn, Verdict> train_and_verify(
    const SimFn& sim, const Box& K, const UnsafeSet& U, const VerifierConfig& cfg,
    const SeverityFn& severity = {}, const CellObserver& observer = {});

}  // namespace reachkit
