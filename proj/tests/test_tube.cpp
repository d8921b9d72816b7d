#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "reachkit/tube.hpp"

using namespace reachkit;

namespace {

Trace constant_trace(double value, double step, std::size_t samples) {
  Trace t(step, 1, samples);
  for (std::size_t k = 0; k < samples; ++k) t.set(0, k, value);
  return t;
}

}  // namespace

TEST_CASE("bloat_trace with flat bound keeps constant radius") {
  Trace t = constant_trace(0.0, 0.1, 11);
  DiscrepancyFn disc{{{1.0, 0.0}}, 1.0};
  ReachTube tube = bloat_trace(t, disc, 0.1);
  for (std::size_t k = 0; k < tube.samples(); ++k) {
    CHECK(tube.lo(0)[k] == doctest::Approx(-0.1));
    CHECK(tube.hi(0)[k] == doctest::Approx(0.1));
  }
}

TEST_CASE("bloat_trace grows with exp(gamma t)") {
  Trace t = constant_trace(0.0, 0.5, 3);  // t = 0, 0.5, 1
  DiscrepancyFn disc{{{1.0, std::log(2.0)}}, 1.0};
  ReachTube tube = bloat_trace(t, disc, 0.1);
  CHECK(tube.hi(0)[0] == doctest::Approx(0.1));
  CHECK(tube.hi(0)[2] == doctest::Approx(0.2));  // 0.1 * e^{ln 2}
  CHECK(tube.lo(0)[2] == doctest::Approx(-0.2));
}

TEST_CASE("bloat_trace radius scales with c") {
  Trace t = constant_trace(0.0, 0.1, 5);
  DiscrepancyFn disc{{{2.0, 0.0}}, 1.0};
  ReachTube tube = bloat_trace(t, disc, 0.1);
  CHECK(tube.hi(0)[4] == doctest::Approx(0.2));
}

TEST_CASE("bloat_trace contains the generating trace, monotone in delta and c") {
  Trace t(0.05, 2, 21);
  for (std::size_t k = 0; k < 21; ++k) {
    t.set(0, k, std::sin(0.3 * static_cast<double>(k)));
    t.set(1, k, 2.0 - 0.05 * static_cast<double>(k));
  }
  DiscrepancyFn disc{{{1.2, 0.4}, {1.0, -0.1}}, 1.0};

  ReachTube tube = bloat_trace(t, disc, 0.05);
  CHECK(tube.contains(t));

  ReachTube wider = bloat_trace(t, disc, 0.1);
  DiscrepancyFn bigger_c{{{2.4, 0.4}, {2.0, -0.1}}, 1.0};
  ReachTube wider_c = bloat_trace(t, bigger_c, 0.05);
  for (std::size_t d = 0; d < 2; ++d) {
    for (std::size_t k = 0; k < 21; ++k) {
      double r0 = 0.5 * (tube.hi(d)[k] - tube.lo(d)[k]);
      CHECK(0.5 * (wider.hi(d)[k] - wider.lo(d)[k]) >= r0);
      CHECK(0.5 * (wider_c.hi(d)[k] - wider_c.lo(d)[k]) >= r0);
    }
  }
}

TEST_CASE("bloat_trace validates arguments") {
  Trace t = constant_trace(0.0, 0.1, 3);
  DiscrepancyFn wrong{{{1.0, 0.0}, {1.0, 0.0}}, 1.0};
  CHECK_THROWS_AS(bloat_trace(t, wrong, 0.1), std::invalid_argument);
  DiscrepancyFn disc{{{1.0, 0.0}}, 1.0};
  CHECK_THROWS_AS(bloat_trace(t, disc, -0.1), std::invalid_argument);
}

TEST_CASE("BloatTable matches bloat_trace bit for bit") {
  Trace t(0.01, 1, 101);
  for (std::size_t k = 0; k < 101; ++k) t.set(0, k, 0.3 * static_cast<double>(k));
  DiscrepancyFn disc{{{1.5, 0.25}}, 1.0};
  ReachTube direct = bloat_trace(t, disc, 0.2);
  BloatTable table(disc, t.step(), t.samples());
  ReachTube via_table = table.apply(t, 0.2);
  for (std::size_t k = 0; k < 101; ++k) {
    CHECK(direct.lo(0)[k] == via_table.lo(0)[k]);
    CHECK(direct.hi(0)[k] == via_table.hi(0)[k]);
  }
}
