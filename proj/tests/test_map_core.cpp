#include "doctest.h"

#include <cmath>
#include <random>

#include "logistic/error.hpp"
#include "logistic/map_core.hpp"
#include "oracles.hpp"

using namespace logistic;

TEST_CASE("step") {
  CHECK(step(MapParams(3.2), 0.0) == 0.0);
  CHECK(step(MapParams(4.0), 0.5) == 1.0);
  CHECK(step(MapParams(2.0), 0.5) == 0.5);
}

TEST_CASE("parameter domain") {
  CHECK_THROWS_AS(MapParams(4.5), ParameterOutOfDomain);
  CHECK_THROWS_AS(MapParams(-0.1), ParameterOutOfDomain);
  CHECK_THROWS_AS(MapParams(std::nan("")), ParameterOutOfDomain);
  CHECK(MapParams(4.0).in_domain());

  const auto wild = MapParams::unchecked(4.5);
  CHECK_FALSE(wild.in_domain());
  CHECK(wild.a() == 4.5);
  CHECK(MapParams::unchecked(3.0).in_domain());
  CHECK(MapParams::critical_point == 0.5);
}

TEST_CASE("normalize_quadratic") {
  SUBCASE("unit scale") {
    const auto n = normalize_quadratic({3.2, 3.2});
    CHECK(n.params.a() == 3.2);
    CHECK(n.scale == 1.0);
  }
  SUBCASE("scale b/a, brute force against the raw recurrence") {
    const RawQuadraticParams raw{2.0, 4.0};
    const auto n = normalize_quadratic(raw);
    CHECK(n.params.a() == 2.0);
    CHECK(n.scale == 2.0);

    double x = 0.1;  // raw state
    double y = n.scale * x;
    for (int i = 0; i < 100; ++i) {
      x = x * (2.0 - 4.0 * x);
      y = oracle::logistic(2.0, y);
      CHECK(std::abs(n.scale * x - y) < 1e-12);
    }
  }
  SUBCASE("degenerate") {
    CHECK_THROWS_AS(normalize_quadratic({0.0, 1.0}), DegenerateParameter);
    CHECK_THROWS_AS(normalize_quadratic({2.0, 0.0}), DegenerateParameter);
    CHECK_THROWS_AS(normalize_quadratic({2.0, -1.0}), DegenerateParameter);
  }
}

TEST_CASE("normalization round trip over random parameters") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> a_dist(0.5, 3.9), b_dist(0.1, 10.0), u(0.05, 0.95);
  for (int trial = 0; trial < 50; ++trial) {
    const RawQuadraticParams raw{a_dist(rng), b_dist(rng)};
    const auto n = normalize_quadratic(raw);
    // Raw initial state inside the invariant interval [0, a / b].
    double x = u(rng) * raw.a / raw.b;
    double y = n.scale * x;
    for (int i = 0; i < 100; ++i) {
      x = raw_step(raw, x);
      y = step(n.params, y);
      REQUIRE(std::abs(n.scale * x - y) < 1e-12);
    }
  }
}

TEST_CASE("orbit") {
  SUBCASE("extinction below a = 1") {
    const auto o = orbit(MapParams(0.95), 0.6, 200, 0);
    REQUIRE(o.size() == 200);
    CHECK(o.states.front() == 0.6);
    CHECK(o.states.back() < 1e-3);
    for (std::size_t k = 1; k < o.size(); ++k) CHECK(o.states[k] < o.states[k - 1]);
    CHECK_FALSE(o.escaped);
    CHECK_FALSE(o.first_exit);
  }
  SUBCASE("a > 4 leaves the unit interval at once and escapes") {
    const auto o = orbit(MapParams::unchecked(4.5), 0.5, 10, 0);
    CHECK(o.escaped);
    REQUIRE(o.first_exit);
    CHECK(*o.first_exit <= 2);
    REQUIRE(o.size() >= 3);
    CHECK(o.states[1] > 1.0);
    CHECK(o.states[2] < 0.0);
    for (double x : o.states) CHECK(std::abs(x) <= escape_bound);
  }
  SUBCASE("converges to (a - 1) / a") {
    const auto o = orbit(MapParams(2.5), 0.3, 500, 0);
    double x = 0.3;
    for (int i = 0; i < 499; ++i) x = oracle::logistic(2.5, x);
    CHECK(o.states.back() == x);
    CHECK(std::abs(o.states.back() - 0.6) < 1e-12);
  }
  SUBCASE("transient is discarded") {
    const auto full = orbit(MapParams(3.7), 0.2, 30, 0);
    const auto tail = orbit(MapParams(3.7), 0.2, 10, 20);
    for (std::size_t k = 0; k < 10; ++k) CHECK(tail.states[k] == full.states[20 + k]);
  }
  SUBCASE("escape during the transient leaves no states") {
    const auto o = orbit(MapParams::unchecked(4.5), 0.5, 5, 100);
    CHECK(o.escaped);
    CHECK(o.states.empty());
  }
  CHECK_THROWS_AS(orbit(MapParams(2.0), 0.5, 0, 0), InvalidArgument);
}

TEST_CASE("fixed points") {
  CHECK(fixed_points(MapParams(2.0)) == std::vector<double>{0.0, 0.5});
  CHECK(fixed_points(MapParams(0.95)) == std::vector<double>{0.0});
  const auto fp = fixed_points(MapParams(3.2));
  REQUIRE(fp.size() == 2);
  CHECK(fp[1] == doctest::Approx(2.2 / 3.2).epsilon(1e-15));
  CHECK(std::abs(fp[1] - 0.6875) < 1e-15);

  for (double a = 0.0; a <= 4.0; a += 0.01) {
    const MapParams p(a);
    for (double x : fixed_points(p)) CHECK(std::abs(step(p, x) - x) < 1e-12);
  }
}

TEST_CASE("derivative") {
  CHECK(derivative(MapParams(3.2), 0.5) == 0.0);
  CHECK(derivative(MapParams(2.5), 0.6) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(derivative(MapParams(4.0), 0.0) == 4.0);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> a_dist(0.0, 4.0), x_dist(0.0, 1.0);
  const double h = 1e-6;
  for (int i = 0; i < 1000; ++i) {
    const double a = a_dist(rng), x = x_dist(rng);
    const double fd = (oracle::logistic(a, x + h) - oracle::logistic(a, x - h)) / (2 * h);
    const double d = derivative(MapParams(a), x);
    CHECK(std::abs(d - fd) <= 1e-6 * std::max(1.0, std::abs(fd)));
  }
}

TEST_CASE("fixed point classification") {
  CHECK(classify_fixed_point(MapParams(0.95)) == FixedPointClass::ExtinctionStable);
  CHECK(classify_fixed_point(MapParams(2.5)) == FixedPointClass::InteriorStable);
  CHECK(classify_fixed_point(MapParams(3.2)) == FixedPointClass::Unstable);
  CHECK(classify_fixed_point(MapParams(1.0)) == FixedPointClass::Marginal);
  CHECK(classify_fixed_point(MapParams(3.0)) == FixedPointClass::Marginal);
  CHECK(classify_fixed_point(MapParams(0.0)) == FixedPointClass::ExtinctionStable);
  CHECK(classify_fixed_point(MapParams(4.0)) == FixedPointClass::Unstable);
  CHECK(std::string(to_string(FixedPointClass::InteriorStable)) == "InteriorStable");
}

TEST_CASE("parabola geometry") {
  for (int i = 0; i <= 400; ++i) {
    const MapParams p(i / 100.0);
    CHECK(step(p, 0.0) == 0.0);
    CHECK(step(p, 1.0) == 0.0);

    // Dense grid containing 0.5 exactly.
    double best = -1.0, arg = -1.0;
    constexpr int N = 1 << 16;
    for (int k = 0; k <= N; ++k) {
      const double x = static_cast<double>(k) / N;
      const double y = step(p, x);
      if (y > best) best = y, arg = x;
    }
    CHECK(std::abs(best - p.a() / 4.0) < 1e-9);
    if (p.a() > 0.0) CHECK(arg == 0.5);
  }
}

TEST_CASE("orbits stay in the unit interval and follow the recurrence") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> a_dist(0.0, 4.0), x_dist(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = a_dist(rng);
    const auto o = orbit(MapParams(a), x_dist(rng), 500, 50);
    REQUIRE(o.size() == 500);
    CHECK_FALSE(o.escaped);
    CHECK_FALSE(o.first_exit);
    for (std::size_t k = 0; k < o.size(); ++k) {
      REQUIRE(o.states[k] >= 0.0);
      REQUIRE(o.states[k] <= 1.0);
      if (k > 0) REQUIRE(o.states[k] == a * o.states[k - 1] * (1.0 - o.states[k - 1]));
    }
  }
}
