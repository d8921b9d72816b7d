#include "reachkit/verifier.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

#include "reachkit/kernels.hpp"
#include "reachkit/simulator.hpp"

namespace reachkit {

int VerifierConfig::resolved_m() const {
  if (m_train) {
    if (*m_train < 2) throw std::invalid_argument("m_train must be >= 2");
    return *m_train;
  }
  return required_samples(pac ? *pac : PacParams{});
}

void VerifierConfig::check() const {
  if (!(delta_cover > 0.0)) throw std::invalid_argument("delta_cover must be > 0");
  if (max_refine_depth < 0) throw std::invalid_argument("max_refine_depth must be >= 0");
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be > 0");
  if (!(horizon >= tau)) throw std::invalid_argument("horizon must be >= tau");
  if (boundary_margin < 0.0) throw std::invalid_argument("boundary_margin must be >= 0");
}

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Safe: return "safe";
    case VerdictKind::Unsafe: return "unsafe";
    case VerdictKind::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<double> extract_severity(const ReachTube& tube,
                                       std::size_t front_s, std::size_t front_v,
                                       std::size_t rear_s, std::size_t rear_v,
                                       double theta) {
  const std::size_t n = tube.samples();
  std::vector<double> sep_lo(n);
  kernels::sub(tube.lo(front_s).data(), tube.hi(rear_s).data(), sep_lo.data(), n);
  double m = kernels::severity_scan(sep_lo.data(), tube.hi(rear_v).data(),
                                    tube.lo(front_v).data(), theta, n);
  if (m == -std::numeric_limits<double>::infinity()) return std::nullopt;
  return m > 0.0 ? m : 0.0;
}

namespace {

// min over the tube of (a . x - b) per constraint; disjoint when positive
// margin remains for all of them.
bool tube_disjoint(const ReachTube& tube, const UnsafeSet& u, double margin,
                   std::vector<double>& scratch) {
  const std::size_t n = tube.samples();
  for (const auto& c : u.constraints) {
    scratch.assign(n, 0.0);
    for (std::size_t d = 0; d < c.a.size(); ++d) {
      double coef = c.a[d];
      if (coef == 0.0) continue;
      const double* row = coef > 0.0 ? tube.lo(d).data() : tube.hi(d).data();
      kernels::axpy(coef, row, scratch.data(), n);
    }
    if (kernels::min_value(scratch.data(), n) <= c.b + margin) return false;
  }
  return true;
}

std::optional<std::size_t> first_unsafe_sample(const Trace& trace,
                                               const UnsafeSet& u,
                                               std::vector<double>& scratch) {
  const std::size_t n = trace.samples();
  std::optional<std::size_t> best;
  for (const auto& c : u.constraints) {
    scratch.assign(n, 0.0);
    for (std::size_t d = 0; d < c.a.size(); ++d) {
      if (c.a[d] == 0.0) continue;
      kernels::axpy(c.a[d], trace.series(d).data(), scratch.data(), n);
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (scratch[k] <= c.b) {
        if (!best || k < *best) best = k;
        break;
      }
    }
  }
  return best;
}

struct WorkCell {
  Box box;
  int depth;
};

}  // namespace

Verdict verify(const SimFn& sim, const Box& K, const UnsafeSet& U,
               const DiscrepancyFn& disc, const VerifierConfig& cfg,
               const SeverityFn& severity, const CellObserver& observer) {
  cfg.check();
  if (disc.dim() != K.dim() || U.dim() != K.dim()) {
    throw std::invalid_argument("verify: dimension mismatch");
  }
  if (disc.horizon < cfg.horizon - 1e-9) {
    throw std::invalid_argument("verify: discrepancy horizon shorter than cfg horizon");
  }

  const std::size_t samples = step_count(cfg.tau, cfg.horizon) + 1;
  const BloatTable table(disc, cfg.tau, samples);

  std::deque<WorkCell> queue;
  for (auto& cell : grid_cover(K, cfg.delta_cover)) {
    queue.push_back({std::move(cell.box), 0});
  }

  Verdict verdict;
  double severity_acc = -std::numeric_limits<double>::infinity();
  bool any_capped = false;
  std::vector<double> scratch;

  auto accumulate_severity = [&](const ReachTube& tube) {
    if (!severity) return;
    if (auto s = severity(tube); s && *s > severity_acc) severity_acc = *s;
  };

  while (!queue.empty()) {
    WorkCell cell = std::move(queue.front());
    queue.pop_front();
    ++verdict.cells_processed;
    if (cell.depth > verdict.max_depth_reached) {
      verdict.max_depth_reached = cell.depth;
    }

    Trace trace = sim(cell.box.center(), cfg.tau, cfg.horizon);
    if (trace.samples() != samples || trace.dim() != K.dim()) {
      throw std::invalid_argument("verify: simulator returned mismatched trace");
    }
    const double delta = cell.box.max_half_width();
    ReachTube tube = table.apply(trace, delta);

    if (tube_disjoint(tube, U, cfg.boundary_margin, scratch)) {
      if (observer) observer({cell.box, cell.depth, CellOutcome::Discarded});
      continue;
    }

    if (verdict.counterexample) {
      // A counterexample already ended the search; the rest of the queue only
      // contributes its tube severity so the bound still covers all of K.
      accumulate_severity(tube);
      if (observer) observer({cell.box, cell.depth, CellOutcome::SeveritySweep});
      continue;
    }

    if (auto k = first_unsafe_sample(trace, U, scratch)) {
      verdict.counterexample =
          Counterexample{cell.box.center(), std::move(trace), *k};
      accumulate_severity(tube);
      if (observer) {
        observer({cell.box, cell.depth, CellOutcome::FoundCounterexample});
      }
      continue;
    }

    if (cell.depth < cfg.max_refine_depth) {
      auto [left, right] = refine_cell(cell.box);
      if (observer) observer({cell.box, cell.depth, CellOutcome::Refined});
      queue.push_back({std::move(left), cell.depth + 1});
      queue.push_back({std::move(right), cell.depth + 1});
    } else {
      any_capped = true;
      accumulate_severity(tube);
      if (observer) observer({cell.box, cell.depth, CellOutcome::DepthCapped});
    }
  }

  if (verdict.counterexample) {
    verdict.kind = VerdictKind::Unsafe;
  } else if (any_capped) {
    verdict.kind = VerdictKind::Unknown;
  } else {
    verdict.kind = VerdictKind::Safe;
  }
  if (verdict.kind != VerdictKind::Safe && severity &&
      severity_acc > -std::numeric_limits<double>::infinity()) {
    verdict.severity_bound = severity_acc;
  }
  return verdict;
}

std::pair<DiscrepancyFn, Verdict> train_and_verify(
    const SimFn& sim, const Box& K, const UnsafeSet& U, const VerifierConfig& cfg,
    const SeverityFn& severity, const CellObserver& observer) {
  cfg.check();
  DiscrepancyFn disc;
  if (cfg.lipschitz) {
    disc = lipschitz_discrepancy(K.dim(), *cfg.lipschitz, cfg.horizon);
  } else {
    const int m = cfg.resolved_m();
    std::vector<Vec> starts = sample_initial(K, m, cfg.seed);
    std::vector<Trace> traces;
    traces.reserve(starts.size());
    for (const Vec& x0 : starts) {
      traces.push_back(sim(x0, cfg.tau, cfg.horizon));
    }
    disc = learn_all(traces);
  }
  Verdict v = verify(sim, K, U, disc, cfg, severity, observer);
  return {std::move(disc), std::move(v)};
}

}  // namespace reachkit
