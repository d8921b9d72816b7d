#include <doctest.h>

#include <random>
#include <stdexcept>

#include "reachkit/unsafe.hpp"

using namespace reachkit;

namespace {

// x >= 2 encoded as -x <= -2
UnsafeSet x_at_least_2() { return UnsafeSet({HalfSpace{{-1.0}, -2.0}}); }

}  // namespace

TEST_CASE("box_hits_unsafe three-way classification") {
  UnsafeSet u = x_at_least_2();
  CHECK(box_hits_unsafe(Box({0.0}, {1.0}), u) == SetRelation::Disjoint);
  CHECK(box_hits_unsafe(Box({1.5}, {3.0}), u) == SetRelation::Overlaps);
  CHECK(box_hits_unsafe(Box({2.5}, {3.0}), u) == SetRelation::Contained);
}

TEST_CASE("half-spaces are closed") {
  UnsafeSet u = x_at_least_2();
  CHECK(point_unsafe({2.0}, u));
  CHECK_FALSE(point_unsafe({1.9999999}, u));
  // box touching the boundary from below is not disjoint
  CHECK(box_hits_unsafe(Box({1.0}, {2.0}), u) == SetRelation::Overlaps);
}

TEST_CASE("union semantics: contained in any one half-space suffices") {
  UnsafeSet u({HalfSpace{{-1.0, 0.0}, -2.0},   // x >= 2
               HalfSpace{{0.0, 1.0}, 0.0}});   // y <= 0
  CHECK(box_hits_unsafe(Box({0.0, -3.0}, {1.0, -1.0}), u) == SetRelation::Contained);
  CHECK(box_hits_unsafe(Box({0.0, 1.0}, {1.0, 2.0}), u) == SetRelation::Disjoint);
  CHECK(box_hits_unsafe(Box({0.0, -1.0}, {1.0, 2.0}), u) == SetRelation::Overlaps);
}

TEST_CASE("UnsafeSet validation") {
  CHECK_THROWS_AS(UnsafeSet(std::vector<HalfSpace>{}), std::invalid_argument);
  CHECK_THROWS_AS(UnsafeSet({HalfSpace{{1.0}, 0.0}, HalfSpace{{1.0, 2.0}, 0.0}}),
                  std::invalid_argument);
}

TEST_CASE("classification agrees with point sampling") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_real_distribution<double> span(-3.0, 3.0);

  for (int trial = 0; trial < 50; ++trial) {
    Vec lo(2), hi(2);
    for (int d = 0; d < 2; ++d) {
      double a = span(rng), b = span(rng);
      lo[d] = std::min(a, b);
      hi[d] = std::max(a, b);
    }
    Box box(lo, hi);
    UnsafeSet u({HalfSpace{{span(rng), span(rng)}, span(rng)},
                 HalfSpace{{span(rng), span(rng)}, span(rng)}});
    SetRelation rel = box_hits_unsafe(box, u);

    for (int i = 0; i < 1000; ++i) {
      Vec x{lo[0] + u01(rng) * (hi[0] - lo[0]), lo[1] + u01(rng) * (hi[1] - lo[1])};
      bool bad = point_unsafe(x, u);
      if (rel == SetRelation::Disjoint) CHECK_FALSE(bad);
      if (rel == SetRelation::Contained) CHECK(bad);
    }
  }
}
