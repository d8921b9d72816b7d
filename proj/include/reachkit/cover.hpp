#pragma once

#include <utility>
#include <vector>

#include "reachkit/types.hpp"

namespace reachkit {

struct CoverCell {
  Vec center;
  Box box;
};

/// Partition K into an axis-aligned grid of cells with max-norm radius at
/// most delta. Per dimension the cell count is ceil(width / (2 delta)); a
/// zero-width dimension contributes a single degenerate slice. Cells have
/// disjoint interiors and their union is exactly K.
std::vector<CoverCell> grid_cover(const Box& k, double delta);

/// Bisect the widest dimension (ties broken by lowest index). Throws if the
/// cell is degenerate in every dimension.
std::pair<Box, Box> refine_cell(const Box& cell);

}  // namespace reachkit
