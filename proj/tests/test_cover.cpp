#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "reachkit/cover.hpp"

using namespace reachkit;

TEST_CASE("grid_cover single cell when delta covers the set") {
  auto cells = grid_cover(Box({0.0}, {1.0}), 0.5);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].box.lo[0] == 0.0);
  CHECK(cells[0].box.hi[0] == 1.0);
  CHECK(cells[0].center[0] == doctest::Approx(0.5));
}

TEST_CASE("grid_cover splits per dimension") {
  auto cells = grid_cover(Box({0.0}, {1.0}), 0.25);
  REQUIRE(cells.size() == 2);
  CHECK(cells[0].box.hi[0] == doctest::Approx(0.5));
  CHECK(cells[1].box.lo[0] == doctest::Approx(0.5));

  auto cells2 = grid_cover(Box({0.0, 0.0}, {1.0, 1.0}), 0.25);
  CHECK(cells2.size() == 4);
}

TEST_CASE("grid_cover rejects non-positive delta") {
  CHECK_THROWS_AS(grid_cover(Box({0.0}, {1.0}), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(grid_cover(Box({0.0}, {1.0}), -1.0), std::invalid_argument);
}

TEST_CASE("grid_cover cells have radius at most delta and partition K") {
  Box k({0.0, 2.0, -1.0}, {1.3, 2.0, 1.5});
  double delta = 0.2;
  auto cells = grid_cover(k, delta);

  double vol = 0.0;
  for (const auto& c : cells) {
    CHECK(c.box.max_half_width() <= delta + 1e-12);
    // volume over the non-degenerate dims
    vol += c.box.width(0) * c.box.width(2);
  }
  CHECK(vol == doctest::Approx(k.width(0) * k.width(2)).epsilon(1e-9));

  // membership: every sampled point of K lies in exactly one cell interior
  // or on a shared face (at least one cell)
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    Vec x(k.dim());
    for (std::size_t d = 0; d < k.dim(); ++d) {
      x[d] = k.lo[d] + u(rng) * (k.hi[d] - k.lo[d]);
    }
    int hits = 0;
    for (const auto& c : cells) {
      if (c.box.contains(x)) ++hits;
    }
    CHECK(hits >= 1);
  }
}

TEST_CASE("grid_cover zero-width dimension contributes one slice") {
  auto cells = grid_cover(Box({0.0, 5.0}, {1.0, 5.0}), 0.25);
  CHECK(cells.size() == 2);
  for (const auto& c : cells) {
    CHECK(c.box.lo[1] == 5.0);
    CHECK(c.box.hi[1] == 5.0);
  }
}

TEST_CASE("refine_cell bisects the widest dimension") {
  auto [a, b] = refine_cell(Box({0.0, 0.0}, {4.0, 1.0}));
  CHECK(a.hi[0] == doctest::Approx(2.0));
  CHECK(b.lo[0] == doctest::Approx(2.0));
  CHECK(a.hi[1] == 1.0);

  auto [c, d] = refine_cell(Box({0.0}, {1.0}));
  CHECK(c.hi[0] == doctest::Approx(0.5));
  CHECK(d.lo[0] == doctest::Approx(0.5));

  // tie-break: square splits on dimension 0
  auto [e, f] = refine_cell(Box({0.0, 0.0}, {1.0, 1.0}));
  CHECK(e.hi[0] == doctest::Approx(0.5));
  CHECK(f.lo[0] == doctest::Approx(0.5));
  CHECK(e.hi[1] == 1.0);
}

TEST_CASE("refine_cell children volumes sum to parent") {
  Box parent({0.1, -2.0, 3.0}, {0.9, 1.0, 3.7});
  auto [a, b] = refine_cell(parent);
  CHECK(a.volume() + b.volume() ==
        doctest::Approx(parent.volume()).epsilon(1e-12));
}

TEST_CASE("refine_cell rejects fully degenerate cells") {
  CHECK_THROWS_AS(refine_cell(Box({1.0, 2.0}, {1.0, 2.0})), std::invalid_argument);
}
