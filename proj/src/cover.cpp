#include "reachkit/cover.hpp"

#include <cmath>
#include <stdexcept>

namespace reachkit {

std::vector<CoverCell> grid_cover(const Box& k, double delta) {
  if (!(delta > 0.0)) {
    throw std::invalid_argument("grid_cover: delta must be positive");
  }
  const std::size_t dim = k.dim();
  std::vector<std::size_t> counts(dim, 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    double w = k.width(i);
    if (w > 0.0) {
      counts[i] = static_cast<std::size_t>(std::ceil(w / (2.0 * delta)));
      if (counts[i] == 0) counts[i] = 1;
    }
    total *= counts[i];
  }

  std::vector<CoverCell> cells;
  cells.reserve(total);
  std::vector<std::size_t> idx(dim, 0);
  for (std::size_t n = 0; n < total; ++n) {
    Vec lo(dim), hi(dim), center(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      double w = k.width(i) / static_cast<double>(counts[i]);
      // Endpoints derived from K's own bounds so adjacent cells share faces
      // exactly and the union reproduces K.
      lo[i] = (idx[i] == 0) ? k.lo[i] : k.lo[i] + w * static_cast<double>(idx[i]);
      hi[i] = (idx[i] + 1 == counts[i])
                  ? k.hi[i]
                  : k.lo[i] + w * static_cast<double>(idx[i] + 1);
      center[i] = 0.5 * (lo[i] + hi[i]);
    }
    cells.push_back({std::move(center), Box(std::move(lo), std::move(hi))});
    for (std::size_t i = dim; i-- > 0;) {
      if (++idx[i] < counts[i]) break;
      idx[i] = 0;
    }
  }
  return cells;
}

std::pair<Box, Box> refine_cell(const Box& cell) {
  std::size_t d = cell.widest_dim();
  if (!(cell.width(d) > 0.0)) {
    throw std::invalid_argument("refine_cell: cell is degenerate in every dimension");
  }
  double mid = 0.5 * (cell.lo[d] + cell.hi[d]);
  Box left = cell, right = cell;
  left.hi[d] = mid;
  right.lo[d] = mid;
  return {std::move(left), std::move(right)};
}

}  // namespace reachkit
