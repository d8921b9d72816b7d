#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reachkit/risk.hpp"
#include "reachkit/simulator.hpp"
#include "reachkit/trace.hpp"
#include "reachkit/verifier.hpp"

namespace reachkit {

/// Serializable form of a Verdict (the counterexample trace itself is
/// replayable from its initial state, so only the state and hit time are
/// stored).
struct VerdictRecord {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<double> severity_bound;
  std::optional<Vec> counterexample_state;
  std::optional<double> first_unsafe_time;
  long cells_processed = 0;
  int max_depth_reached = 0;

  bool operator==(const VerdictRecord&) const = default;
};

VerdictRecord to_record(const Verdict& v, double tau);

void write_verdict(const std::string& path, const VerdictRecord& rec);
VerdictRecord read_verdict(const std::string& path);

/// Heat-map CSV. Header (fixed):
///   d_lo,d_hi,r_lo,r_hi,verdict,severity_mps,probability
/// one row per cell, d-major, all numbers with 6 fixed decimals.
void write_grid_csv(const std::string& path, const risk::RiskGrid& grid);
risk::RiskGrid read_grid_csv(const std::string& path);

/// Same layout without the probability column.
void write_sweep_csv(const std::string& path, const risk::VerdictGrid& grid);

/// One rectangle per cell, green for Safe, red intensity proportional to
/// severity up to `severity_cap`, severity printed inside the cell.
void write_heatmap_svg(const std::string& path, const risk::VerdictGrid& grid,
                       double severity_cap = 20.0);

/// Time series CSV: t, s_i, v_i per car, then the adjacent separations.
void write_trace_csv(const std::string& path, const Trace& trace,
                     const StateLayout& layout);

std::uint64_t fnv1a64(const std::string& bytes);

/// Run manifest: tool version, command, config hash, seed, output files.
void write_manifest(const std::string& path, const std::string& command,
                    const std::string& config_bytes, std::uint64_t seed,
                    const std::vector<std::string>& outputs);

}  // namespace reachkit
