#pragma once

#include <vector>

#include "reachkit/types.hpp"

namespace reachkit {

/// Linear half-space a . x <= b (closed).
struct HalfSpace {
  Vec a;
  double b = 0.0;
};

/// Union of half-spaces; a state is unsafe if it satisfies any of them.
struct UnsafeSet {
  std::vector<HalfSpace> constraints;

  UnsafeSet() = default;
  explicit UnsafeSet(std::vector<HalfSpace> cs);  // validates non-empty, equal dims

  std::size_t dim() const { return constraints.front().a.size(); }
};

enum class SetRelation { Disjoint, Overlaps, Contained };

/// Interval-arithmetic range of a . x over the box.
Interval dot_range(const Vec& a, const Box& box);

bool point_unsafe(const Vec& x, const UnsafeSet& u);

/// Disjoint: no constraint can be met anywhere in the box. Contained: the box
/// lies entirely inside at least one half-space. Otherwise Overlaps.
SetRelation box_hits_unsafe(const Box& box, const UnsafeSet& u);

}  // namespace reachkit
