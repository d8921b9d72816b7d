#pragma once

#include <vector>

#include "reachkit/aeb.hpp"
#include "reachkit/types.hpp"
#include "reachkit/verifier.hpp"

namespace reachkit::risk {

/// Marginal distribution of one scenario parameter: a skew-normal density
/// renormalized over a finite support, or an explicit table of
/// (interval, probability) rows.
class ParamDistribution {
 public:
  enum class Kind { SkewNormal, Table };

  static ParamDistribution skew_normal(double location, double scale,
                                       double shape, Interval support);
  static ParamDistribution table(std::vector<std::pair<Interval, double>> rows);

  Kind kind() const { return kind_; }
  Interval support() const { return support_; }

  /// Probability mass of an interval inside the support. Skew-normal masses
  /// come from adaptive quadrature of the renormalized density; table lookups
  /// must match a row exactly (1e-9 endpoint tolerance).
  double cell_probability(const Interval& cell) const;

 private:
  ParamDistribution() = default;

  Kind kind_ = Kind::Table;
  Interval support_;
  // skew-normal parameters
  double location_ = 0.0, scale_ = 1.0, shape_ = 0.0, norm_ = 1.0;
  std::vector<std::pair<Interval, double>> rows_;
};

double cell_probability(const ParamDistribution& dist, const Interval& cell);

/// Product of the two marginal masses (parameters treated as independent).
double joint_probability(double p_d, double p_r);

/// Which scenario intervals the two grid axes partition.
struct GridAxes {
  bool first_is_d = true;
  std::size_t first_idx = 0;
  bool second_is_d = false;
  std::size_t second_idx = 0;
};

/// Verdict + severity over an n_d x n_r partition of the parameter plane.
struct VerdictGrid {
  std::vector<Interval> d_cells;  // first axis
  std::vector<Interval> r_cells;  // second axis
  std::vector<VerdictKind> verdicts;  // row-major [i * n_r + j]
  std::vector<double> severity;       // 0 for Safe cells

  std::size_t n_d() const { return d_cells.size(); }
  std::size_t n_r() const { return r_cells.size(); }
  std::size_t at(std::size_t i, std::size_t j) const { return i * n_r() + j; }
};

struct RiskGrid {
  VerdictGrid grid;
  std::vector<double> probability;  // same layout, sums to 1
};

/// Partition the spec's parameter intervals and verify each cell. The
/// discrepancy is trained once over the full initial set and reused for every
/// cell. Cells run independently across `jobs` workers.
VerdictGrid build_verdict_grid(const aeb::AebSpec& spec, std::size_t n_d,
                               std::size_t n_r, const VerifierConfig& cfg,
                               int jobs = 1, const GridAxes& axes = {});

RiskGrid build_risk_grid(const aeb::AebSpec& spec, std::size_t n_d,
                         std::size_t n_r, const ParamDistribution& d_dist,
                         const ParamDistribution& r_dist,
                         const VerifierConfig& cfg, int jobs = 1);

/// Sum of probability * severity over the grid.
double expected_severity(const RiskGrid& grid);

}  // namespace reachkit::risk
