#include "logistic/continuous_logistic.hpp"

#include <algorithm>
#include <cmath>

#include "logistic/error.hpp"

namespace logistic {

void OdeParams::validate() const {
  if (!(r > 0.0) || !(M > 0.0) || !(P0 >= 0.0)) {
    throw InvalidArgument("logistic ODE needs r > 0, M > 0, P0 >= 0");
  }
}

double OdeSolution::time(std::size_t k) const noexcept {
  if (k + 1 >= values.size()) {
    return t_end;
  }
  return t0 + static_cast<double>(k) * dt;
}

double exact_solution(const OdeParams& p, double t) noexcept {
  if (p.P0 == 0.0 || p.P0 == p.M) {
    return p.P0;
  }
  return p.M * p.P0 / (p.P0 + (p.M - p.P0) * std::exp(-p.r * p.M * t));
}

OdeSolution rk4_integrate(const OdeParams& p, double t_end, double dt) {
  p.validate();
  if (!(t_end > 0.0) || !(dt > 0.0) || dt > t_end) {
    throw InvalidArgument("rk4 needs t_end > 0 and 0 < dt <= t_end");
  }

  // Full steps that fit strictly before t_end; a remainder below 1e-12 dt
  // is absorbed into the last full step.
  auto full = static_cast<std::size_t>(std::floor(t_end / dt));
  double remainder = t_end - static_cast<double>(full) * dt;
  if (remainder <= 1e-12 * dt) {
    remainder = 0.0;
  }

  OdeSolution sol{0.0, dt, t_end, {}};
  sol.values.reserve(full + 2);
  double y = p.P0;
  sol.values.push_back(y);

  auto advance = [&p](double y, double h) {
    const double k1 = rhs(p, y);
    const double k2 = rhs(p, y + 0.5 * h * k1);
    const double k3 = rhs(p, y + 0.5 * h * k2);
    const double k4 = rhs(p, y + h * k3);
    return y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  };

  for (std::size_t k = 0; k < full; ++k) {
    y = advance(y, dt);
    sol.values.push_back(y);
  }
  if (remainder > 0.0) {
    y = advance(y, remainder);
    sol.values.push_back(y);
  }
  return sol;
}

double lipschitz_bound(const OdeParams& p, double domain_hi) {
  if (!(domain_hi > 0.0)) {
    throw InvalidArgument("lipschitz_bound needs domain_hi > 0");
  }
  return p.r * std::max(p.M, std::abs(p.M - 2.0 * domain_hi));
}

} // namespace logistic
