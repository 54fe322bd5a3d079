#pragma once

// Reference computations for the tests. Nothing here calls into the library;
// each oracle is a closed form or a brute-force loop of its own.

#include <cmath>
#include <cstddef>
#include <utility>

namespace oracle {

inline double logistic(double a, double x) { return a * x * (1.0 - x); }

/// Period-2 points of the logistic map, roots of a^2 x^2 - a(a+1) x + (a+1).
inline std::pair<double, double> two_cycle(double a) {
  const double root = std::sqrt((a + 1.0) * (a - 3.0));
  return {(a + 1.0 - root) / (2.0 * a), (a + 1.0 + root) / (2.0 * a)};
}

/// Multiplier of the 2-cycle in closed form.
inline double two_cycle_multiplier(double a) { return -a * a + 2.0 * a + 4.0; }

/// Real root of a^3 - 4a^2 + 8 in (3, 4): the period-2 superstable parameter.
inline double cubic_superstable_root() {
  long double lo = 3.0L, hi = 4.0L;
  auto f = [](long double a) { return a * a * a - 4.0L * a * a + 8.0L; };
  for (int i = 0; i < 200; ++i) {
    const long double mid = 0.5L * (lo + hi);
    ((f(mid) < 0) == (f(lo) < 0) ? lo : hi) = mid;
  }
  return static_cast<double>(0.5L * (lo + hi));
}

/// Superstable parameter for `period` by extended-precision bisection of the
/// critical return inside [lo, hi].
inline double superstable_long_double(double lo_d, double hi_d, std::size_t period) {
  auto g = [period](long double a) {
    long double x = 0.5L;
    for (std::size_t i = 0; i < period; ++i) x = a * x * (1.0L - x);
    return x - 0.5L;
  };
  long double lo = lo_d, hi = hi_d;
  const bool neg_lo = g(lo) < 0;
  for (int i = 0; i < 200; ++i) {
    const long double mid = 0.5L * (lo + hi);
    ((g(mid) < 0) == neg_lo ? lo : hi) = mid;
  }
  return static_cast<double>(0.5L * (lo + hi));
}

/// Sigmoid solution of dP/dt = r (M - P) P.
inline double sigmoid(double r, double M, double P0, double t) {
  return M * P0 / (P0 + (M - P0) * std::exp(-r * M * t));
}

/// Plain RK4 with n equal steps on [0, t].
inline double rk4_reference(double r, double M, double P0, double t, std::size_t n) {
  const double h = t / static_cast<double>(n);
  auto f = [&](double P) { return r * (M - P) * P; };
  double y = P0;
  for (std::size_t i = 0; i < n; ++i) {
    const double k1 = f(y), k2 = f(y + h * k1 / 2), k3 = f(y + h * k2 / 2), k4 = f(y + h * k3);
    y += h * (k1 + 2 * k2 + 2 * k3 + k4) / 6;
  }
  return y;
}

} // namespace oracle
