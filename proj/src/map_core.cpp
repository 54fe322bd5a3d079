#include "logistic/map_core.hpp"

#include <cmath>
#include <string>

#include "logistic/error.hpp"

namespace logistic {

MapParams::MapParams(double a) : a_(a), in_domain_(true) {
  if (!(a >= 0.0 && a <= 4.0)) {
    throw ParameterOutOfDomain("a = " + std::to_string(a) + " outside [0, 4]");
  }
}

MapParams MapParams::unchecked(double a) noexcept {
  return MapParams(a, a >= 0.0 && a <= 4.0);
}

const char* to_string(FixedPointClass c) noexcept {
  switch (c) {
  case FixedPointClass::ExtinctionStable: return "ExtinctionStable";
  case FixedPointClass::InteriorStable: return "InteriorStable";
  case FixedPointClass::Unstable: return "Unstable";
  case FixedPointClass::Marginal: return "Marginal";
  }
  return "?";
}

Normalization normalize_quadratic(const RawQuadraticParams& raw) {
  if (raw.a == 0.0 || !(raw.b > 0.0)) {
    throw DegenerateParameter("raw quadratic needs a != 0 and b > 0");
  }
  return {MapParams::unchecked(raw.a), raw.b / raw.a};
}

Orbit orbit(const MapParams& p, double x0, std::size_t n, std::size_t transient) {
  if (n == 0) {
    throw InvalidArgument("orbit length must be at least 1");
  }
  Orbit out{p, x0, transient, {}, false, std::nullopt};
  out.states.reserve(n);

  double x = x0;
  const std::size_t total = transient + n;
  for (std::size_t i = 0; i < total; ++i) {
    if (!out.first_exit && !(x >= 0.0 && x <= 1.0)) {
      out.first_exit = i;
    }
    if (!(std::abs(x) <= escape_bound)) {
      out.escaped = true;
      break;
    }
    if (i >= transient) {
      out.states.push_back(x);
    }
    x = step(p, x);
  }
  return out;
}

std::vector<double> fixed_points(const MapParams& p) {
  if (p.a() <= 1.0) {
    return {0.0};
  }
  return {0.0, (p.a() - 1.0) / p.a()};
}

FixedPointClass classify_fixed_point(const MapParams& p) noexcept {
  const double a = p.a();
  if (a == 1.0 || a == 3.0) {
    return FixedPointClass::Marginal;
  }
  if (a < 1.0) {
    return FixedPointClass::ExtinctionStable;
  }
  // Multiplier at (a - 1) / a is 2 - a.
  if (std::abs(2.0 - a) < 1.0) {
    return FixedPointClass::InteriorStable;
  }
  return FixedPointClass::Unstable;
}

double iterate(const MapParams& p, double x, std::size_t count) noexcept {
  for (std::size_t i = 0; i < count; ++i) {
    x = step(p, x);
  }
  return x;
}

} // namespace logistic
