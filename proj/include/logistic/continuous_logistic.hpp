#pragma once

// The continuous logistic equation dP/dt = r (M - P) P.

#include <cstddef>
#include <vector>

namespace logistic {

struct OdeParams {
  double r;  ///< growth rate, 1/time
  double M;  ///< maximum sustainable population
  double P0; ///< initial population

  /// Throws InvalidArgument unless r > 0, M > 0 and P0 >= 0.
  void validate() const;
};

/// Samples at t0 + k dt for k < values.size() - 1; the last sample sits at
/// t_end, which may be closer than dt to its predecessor.
struct OdeSolution {
  double t0;
  double dt;
  double t_end;
  std::vector<double> values;

  double time(std::size_t k) const noexcept;
};

inline double rhs(const OdeParams& p, double P) noexcept { return p.r * (p.M - P) * P; }

/// M P0 / (P0 + (M - P0) exp(-r M t)); the equilibria 0 and M are returned as is.
double exact_solution(const OdeParams& p, double t) noexcept;

/// Classical fourth-order Runge-Kutta from t = 0 with fixed step dt; the last
/// step is shortened to land on t_end.
OdeSolution rk4_integrate(const OdeParams& p, double t_end, double dt);

/// Sup of |d rhs / dP| = r |M - 2P| over P in [0, domain_hi].
double lipschitz_bound(const OdeParams& p, double domain_hi);

} // namespace logistic
