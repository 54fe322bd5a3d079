#pragma once

// The logistic map x -> a x (1 - x) on [0, 1], its raw quadratic form
// x -> x (a - b x), orbits, fixed points and their stability.

#include <cstddef>
#include <optional>
#include <vector>

namespace logistic {

/// Growth parameter of the normalized logistic map.
///
/// The checked constructor enforces 0 <= a <= 4. Parameters outside that
/// range (where orbits leave the unit interval and escape) are only available
/// through `unchecked`, which tags the value as out-of-domain.
class MapParams {
public:
  explicit MapParams(double a);
  static MapParams unchecked(double a) noexcept;

  double a() const noexcept { return a_; }
  bool in_domain() const noexcept { return in_domain_; }

  /// Location of the map's maximum.
  static constexpr double critical_point = 0.5;

  friend bool operator==(const MapParams&, const MapParams&) = default;

private:
  MapParams(double a, bool in_domain) noexcept : a_(a), in_domain_(in_domain) {}

  double a_;
  bool in_domain_;
};

/// Parameters of x_{n+1} = x_n (a - b x_n), before normalization.
struct RawQuadraticParams {
  double a;
  double b;
};

struct Normalization {
  MapParams params;
  /// y = scale * x maps the raw recurrence onto the normalized one.
  double scale;
};

/// |x| beyond this is treated as escape to infinity.
inline constexpr double escape_bound = 1e6;

struct Orbit {
  MapParams params;
  double x0;
  std::size_t transient;
  /// states[k] is x_{transient + k}.
  std::vector<double> states;
  bool escaped = false;
  /// Index n of the first iterate x_n outside [0, 1], if any was seen.
  std::optional<std::size_t> first_exit;

  std::size_t size() const noexcept { return states.size(); }
};

enum class FixedPointClass { ExtinctionStable, InteriorStable, Unstable, Marginal };

const char* to_string(FixedPointClass c) noexcept;

/// One application of the map. Evaluated as (a * x) * (1 - x) so every caller
/// reproduces the same bits.
inline double step(const MapParams& p, double x) noexcept {
  return p.a() * x * (1.0 - x);
}

inline double raw_step(const RawQuadraticParams& p, double x) noexcept {
  return x * (p.a - p.b * x);
}

/// d/dx of `step`.
inline double derivative(const MapParams& p, double x) noexcept {
  return p.a() * (1.0 - 2.0 * x);
}

Normalization normalize_quadratic(const RawQuadraticParams& raw);

/// Iterate `transient` steps from x0 without recording, then record `n`
/// states. Iteration stops early, flagging `escaped`, once |x| > escape_bound.
Orbit orbit(const MapParams& p, double x0, std::size_t n, std::size_t transient);

/// [0] for a <= 1, [0, (a - 1) / a] otherwise.
std::vector<double> fixed_points(const MapParams& p);

FixedPointClass classify_fixed_point(const MapParams& p) noexcept;

/// `count` applications of `step`.
double iterate(const MapParams& p, double x, std::size_t count) noexcept;

} // namespace logistic
