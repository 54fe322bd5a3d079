#include "doctest.h"

#include <cmath>
#include <random>

#include "logistic/continuous_logistic.hpp"
#include "logistic/error.hpp"
#include "oracles.hpp"

using namespace logistic;

namespace {

const OdeParams standard{1.0, 1.0, 0.5};

double max_error(const OdeParams& p, const OdeSolution& s) {
  double e = 0.0;
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    e = std::max(e, std::abs(s.values[k] - exact_solution(p, s.time(k))));
  }
  return e;
}

} // namespace

TEST_CASE("rhs") {
  CHECK(rhs(standard, 0.0) == 0.0);
  CHECK(rhs(standard, 1.0) == 0.0);
  CHECK(rhs(standard, 0.5) == 0.25);
  CHECK(rhs({2.0, 3.0, 0.0}, 1.0) == 4.0);
}

TEST_CASE("exact_solution") {
  for (double t : {0.0, 0.3, 7.0, 100.0}) {
    CHECK(exact_solution({1.0, 1.0, 1.0}, t) == 1.0);
    CHECK(exact_solution({2.0, 5.0, 5.0}, t) == 5.0);
    CHECK(exact_solution({2.0, 5.0, 0.0}, t) == 0.0);
  }

  const double v = exact_solution(standard, 1.0);
  CHECK(std::abs(v - 1.0 / (1.0 + std::exp(-1.0))) < 1e-15);
  CHECK(std::abs(v - 0.7310586) < 1e-7);
  CHECK(std::abs(v - oracle::rk4_reference(1.0, 1.0, 0.5, 1.0, 10000)) < 1e-9);

  CHECK(std::abs(exact_solution(standard, 50.0) - 1.0) < 1e-15);
  CHECK(exact_solution(standard, 0.0) == 0.5);
}

TEST_CASE("exact_solution satisfies the ODE") {
  const OdeParams cases[] = {standard, {0.7, 2.0, 0.1}, {3.0, 0.5, 1.2}, {1.5, 4.0, 3.9}};
  for (const auto& p : cases) {
    for (double t = 0.05; t < 3.0; t += 0.05) {
      const double h = 1e-5;
      const double fd = (exact_solution(p, t + h) - exact_solution(p, t - h)) / (2 * h);
      const double f = rhs(p, exact_solution(p, t));
      CHECK(std::abs(fd - f) <= 1e-6 * std::max(std::abs(f), 1e-3));
    }
  }
}

TEST_CASE("exact_solution is monotone") {
  const OdeParams below{1.3, 2.0, 0.4}, above{1.3, 2.0, 3.5};
  double prev_below = below.P0, prev_above = above.P0;
  for (double t = 0.01; t < 2.0; t += 0.01) {
    const double b = exact_solution(below, t), a = exact_solution(above, t);
    CHECK(b > prev_below);
    CHECK(a < prev_above);
    prev_below = b;
    prev_above = a;
  }
}

TEST_CASE("rk4_integrate") {
  SUBCASE("standard instance") {
    const auto s = rk4_integrate(standard, 1.0, 0.1);
    REQUIRE(s.values.size() == 11);
    CHECK(s.time(10) == 1.0);
    CHECK(std::abs(s.values.back() - 0.7310586) < 1e-6);
    CHECK(std::abs(s.values.back() - oracle::sigmoid(1, 1, 0.5, 1.0)) < 1e-6);
  }
  SUBCASE("fourth order") {
    const double e1 = max_error(standard, rk4_integrate(standard, 1.0, 0.1));
    const double e2 = max_error(standard, rk4_integrate(standard, 1.0, 0.05));
    CHECK(e1 / e2 > 16.0 * 0.7);
    CHECK(e1 / e2 < 16.0 * 1.3);
    const double order = std::log2(e1 / e2);
    CHECK(order >= 3.7);
    CHECK(order <= 4.3);
  }
  SUBCASE("zero population stays zero") {
    const auto s = rk4_integrate({1.0, 1.0, 0.0}, 2.0, 0.25);
    for (double v : s.values) CHECK(v == 0.0);
  }
  SUBCASE("last step is shortened") {
    const auto s = rk4_integrate(standard, 1.0, 0.3);
    REQUIRE(s.values.size() == 5);
    CHECK(s.time(1) == 0.3);
    CHECK(s.time(3) == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(s.time(4) == 1.0);
    CHECK(std::abs(s.values.back() - oracle::sigmoid(1, 1, 0.5, 1.0)) < 1e-5);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(rk4_integrate(standard, 0.0, 0.1), InvalidArgument);
    CHECK_THROWS_AS(rk4_integrate(standard, 1.0, 2.0), InvalidArgument);
    CHECK_THROWS_AS(rk4_integrate({-1.0, 1.0, 0.5}, 1.0, 0.1), InvalidArgument);
    CHECK_THROWS_AS(rk4_integrate({1.0, 0.0, 0.5}, 1.0, 0.1), InvalidArgument);
  }
}

TEST_CASE("lipschitz_bound") {
  CHECK(lipschitz_bound(standard, 1.0) == 1.0);
  CHECK(lipschitz_bound(standard, 2.0) == 3.0);
  CHECK(lipschitz_bound({2.0, 1.0, 0.0}, 0.5) == 2.0);
  CHECK_THROWS_AS(lipschitz_bound(standard, 0.0), InvalidArgument);

  std::mt19937_64 rng(5);
  const OdeParams cases[] = {standard, {0.4, 3.0, 0.0}, {2.5, 0.7, 0.0}};
  for (const auto& p : cases) {
    for (double hi : {0.3 * p.M, p.M, 1.7 * p.M}) {
      const double L = lipschitz_bound(p, hi);
      std::uniform_real_distribution<double> u(0.0, hi);
      for (int i = 0; i < 100000; ++i) {
        const double x = u(rng), y = u(rng);
        REQUIRE(std::abs(rhs(p, x) - rhs(p, y)) <= L * std::abs(x - y) * (1 + 1e-12) + 1e-15);
      }
    }
  }
}
