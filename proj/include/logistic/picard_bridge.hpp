#pragma once

// Successive approximation for the logistic ODE, carried out on functions of
// time, next to the scalar recurrence x_{n+1} = a x_n (1 - x_n) that shares
// its form.

#include <cstddef>
#include <optional>
#include <vector>

#include "logistic/continuous_logistic.hpp"
#include "logistic/error.hpp"

namespace logistic {

/// Samples of a function at t0 + k dt.
struct GridFunction {
  double t0;
  double dt;
  std::vector<double> values;

  double time(std::size_t k) const noexcept { return t0 + static_cast<double>(k) * dt; }
  std::size_t size() const noexcept { return values.size(); }

  bool conformable(const GridFunction& other) const noexcept {
    return t0 == other.t0 && dt == other.dt && values.size() == other.values.size();
  }
};

double sup_distance(const GridFunction& f, const GridFunction& g);

struct PicardRun {
  std::vector<GridFunction> iterates;
  /// deltas[k] = sup |iterates[k + 1] - iterates[k]|.
  std::vector<double> deltas;
  bool converged = false;
  double tolerance = 0.0;
  /// L T, with L the Lipschitz bound of the right-hand side on [0, domain_hi].
  double contraction_bound = 0.0;
};

class IterationBudgetExhausted : public Error {
public:
  IterationBudgetExhausted(const std::string& what, PicardRun partial)
      : Error("IterationBudgetExhausted", what), run_(std::move(partial)) {}

  const PicardRun& partial_run() const noexcept { return run_; }

private:
  PicardRun run_;
};

/// t -> x0 + integral_0^t rhs(current(s)) ds, by cumulative trapezoid.
GridFunction picard_step(const OdeParams& p, double x0, const GridFunction& current);

/// Interval length 0.5 / L, with L taken on [0, max(M, 2 x0)].
double default_picard_horizon(const OdeParams& p, double x0);

/// Starts from the constant function x0 on [0, T] with T / dt grid intervals
/// (T / dt must be an integer) and applies picard_step until the sup-norm
/// change drops below tol. Throws IterationBudgetExhausted, carrying the run,
/// after max_iter steps without convergence.
PicardRun picard_iterate(const OdeParams& p, double x0, double T, double dt, double tol,
                         std::size_t max_iter);

/// Leading exponent m of |iterate(t) - exact(t)| ~ C t^m, fitted on the grid
/// points in [fit_lo, fit_hi].
struct TaylorFit {
  /// Empty when no sample rose above the resolution floor: the iterate agrees
  /// with the closed form to working precision (an infinite exponent).
  std::optional<double> exponent;
  std::size_t resolved_points;
};

inline constexpr double taylor_fit_lo = 1e-3;
inline constexpr double taylor_fit_hi = 1e-2;

/// Per-iterate fits. A sample only counts as resolved when its error exceeds
/// twice the floor 64 eps max(1, |x|) + t dt^2 |g''|_max / 12, where g is
/// the integrand of the step that produced the iterate (zero for iterate 0).
std::vector<TaylorFit> taylor_fits(const PicardRun& run, const OdeParams& p);

/// Smallest iterate index n whose fitted exponent falls below n + 1 (with 0.2
/// slack); the number of iterates when none does.
std::size_t taylor_agreement_order(const PicardRun& run, const OdeParams& p);

enum class BridgeClass { Converged, Cycle, NonConvergent };

const char* to_string(BridgeClass c) noexcept;

struct BridgeOutcome {
  double a;
  BridgeClass classification;
  /// Newton-polished limit, for Converged.
  double limit = 0.0;
  /// Minimal period, for Cycle.
  std::size_t period = 0;
  /// Iterations performed.
  std::size_t steps = 0;
  /// x_start, x_1, ..., x_steps (empty unless keep_trajectory).
  std::vector<double> trajectory;
};

struct BridgeOptions {
  double x_start = 0.3;
  std::size_t max_iter = 10000;
  double tol = 1e-12;
  std::size_t max_period = 64;
  /// Keep the full trajectory in the outcome; scans usually turn this off.
  bool keep_trajectory = true;
};

/// Iterates x_{n+1} = a x_n (1 - x_n) and classifies the result.
BridgeOutcome scalar_bridge(double a, const BridgeOptions& opts = {});

std::vector<BridgeOutcome> breakdown_scan(double a_min, double a_max, std::size_t n_params,
                                          const BridgeOptions& opts = {},
                                          std::size_t workers = 1);

} // namespace logistic
