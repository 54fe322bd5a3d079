#pragma once

// Periodic orbits of the logistic map: detection on an orbit tail, Newton
// refinement, stability multipliers, and the superstable period-doubling
// ladder used to estimate the Feigenbaum ratio and its accumulation point.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "logistic/map_core.hpp"

namespace logistic {

struct Cycle {
  std::size_t period;
  std::vector<double> points;
  double multiplier;
};

/// Residual bound a refined cycle point satisfies: |step^p(x) - x|.
inline constexpr double cycle_residual_tol = 1e-12;
/// A divisor period d is considered closed if |step^d(x) - x| is below this.
inline constexpr double minimality_tol = 1e-8;

/// Product of map derivatives along the cycle points.
double cycle_multiplier(const MapParams& p, const Cycle& c) noexcept;

/// True when no proper divisor d of `period` closes the orbit of x.
bool is_minimal_period(const MapParams& p, double x, std::size_t period,
                       double tol = minimality_tol) noexcept;

struct DetectOptions {
  double tol = 1e-8;
  std::size_t max_period = 64;
  /// Newton-polish the tail points (see detect_cycle).
  bool polish = true;
};

/// Looks for the smallest p <= max_period such that the last p states of the
/// orbit each match the state p steps earlier within tol. Points are read off
/// the tail in orbit order. With `polish`, the points are replaced by the
/// refined cycle when refinement converges within 1e-6 of the tail; otherwise
/// the raw tail points are kept.
std::optional<Cycle> detect_cycle(const Orbit& orbit, const DetectOptions& opts = {});

/// Newton iteration on step^p(x) - x starting from `guess`, with a local
/// bisection fallback when the Newton slope is below 1e-10.
Cycle refine_cycle(const MapParams& p, double guess, std::size_t period);

/// g(a) = step_a^period(0.5) - 0.5.
double critical_return(double a, std::size_t period) noexcept;

/// Bisection (to the limit of double resolution) plus a secant polish for a
/// root of critical_return inside the bracket.
double find_superstable(std::pair<double, double> bracket, std::size_t period);

struct SuperstableEntry {
  std::size_t period;
  double a;
};

struct SuperstableSequence {
  std::vector<SuperstableEntry> entries;
};

/// Deepest rung of the ladder. Rounding accumulated over the 2^k compositions
/// grows with depth: at period 256 the best double leaves |g| ~ 2e-14, at 512
/// it is already ~1e-13, so deeper rungs cannot meet the superstable residual.
inline constexpr std::size_t max_ladder_period = 256;

/// Superstable parameters for periods 1, 2, 4, ..., max_period.
SuperstableSequence superstable_ladder(std::size_t max_period);

/// delta_k = (a_k - a_{k-1}) / (a_{k+1} - a_k) for k = 1 .. size - 2.
std::vector<double> feigenbaum_delta(const SuperstableSequence& seq);

/// Geometric extrapolation a_inf = a_k + (a_k - a_{k-1}) / (delta - 1) from the
/// last two entries.
double accumulation_point(const SuperstableSequence& seq, double delta);

} // namespace logistic
