#include "logistic/picard_bridge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "logistic/cycle_analysis.hpp"
#include "logistic/ergodic.hpp"
#include "logistic/map_core.hpp"

namespace logistic {

double sup_distance(const GridFunction& f, const GridFunction& g) {
  if (!f.conformable(g)) {
    throw InvalidArgument("grid functions are not conformable");
  }
  double d = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    d = std::max(d, std::abs(f.values[k] - g.values[k]));
  }
  return d;
}

GridFunction picard_step(const OdeParams& p, double x0, const GridFunction& current) {
  if (current.size() < 2 || current.t0 != 0.0 || !(current.dt > 0.0)) {
    throw InvalidArgument("picard_step needs a grid starting at t = 0 with >= 2 samples");
  }
  const std::size_t n = current.size();
  GridFunction next{current.t0, current.dt, std::vector<double>(n)};
  const double half_dt = 0.5 * current.dt;
  double integral = 0.0;
  double g_prev = rhs(p, current.values[0]);
  next.values[0] = x0;
  for (std::size_t k = 1; k < n; ++k) {
    const double g = rhs(p, current.values[k]);
    integral += half_dt * (g_prev + g);
    next.values[k] = x0 + integral;
    g_prev = g;
  }
  return next;
}

double default_picard_horizon(const OdeParams& p, double x0) {
  return 0.5 / lipschitz_bound(p, std::max(p.M, 2.0 * x0));
}

PicardRun picard_iterate(const OdeParams& p, double x0, double T, double dt, double tol,
                         std::size_t max_iter) {
  if (!(p.r > 0.0) || !(p.M > 0.0)) {
    throw InvalidArgument("logistic ODE needs r > 0 and M > 0");
  }
  if (!(T > 0.0) || !(dt > 0.0) || dt > T / 8.0 || !(x0 >= 0.0) || !(tol > 0.0) ||
      max_iter < 1) {
    throw InvalidArgument("picard_iterate needs T > 0, 0 < dt <= T/8, x0 >= 0, tol > 0");
  }
  const double ratio = T / dt;
  const double intervals = std::round(ratio);
  if (std::abs(ratio - intervals) > 1e-9 * ratio) {
    throw InvalidArgument("T must be an integer multiple of dt");
  }

  PicardRun run;
  run.tolerance = tol;
  run.contraction_bound = lipschitz_bound(p, std::max(p.M, 2.0 * x0)) * T;
  run.iterates.push_back(
      GridFunction{0.0, dt, std::vector<double>(static_cast<std::size_t>(intervals) + 1, x0)});

  for (std::size_t it = 0; it < max_iter; ++it) {
    GridFunction next = picard_step(p, x0, run.iterates.back());
    const double delta = sup_distance(next, run.iterates.back());
    run.iterates.push_back(std::move(next));
    run.deltas.push_back(delta);
    if (delta < tol) {
      run.converged = true;
      return run;
    }
  }
  throw IterationBudgetExhausted("no convergence after " + std::to_string(max_iter) +
                                     " Picard steps",
                                 std::move(run));
}

namespace {

// Max |g''| of the integrand rhs(f) from second differences at interior grid
// points up to index k_hi.
double integrand_curvature(const OdeParams& p, const GridFunction& f, std::size_t k_hi) {
  double m = 0.0;
  const double inv_dt2 = 1.0 / (f.dt * f.dt);
  for (std::size_t k = 1; k + 1 < f.size() && k <= k_hi; ++k) {
    const double g2 = rhs(p, f.values[k + 1]) - 2.0 * rhs(p, f.values[k]) + rhs(p, f.values[k - 1]);
    m = std::max(m, std::abs(g2) * inv_dt2);
  }
  return m;
}

} // namespace

std::vector<TaylorFit> taylor_fits(const PicardRun& run, const OdeParams& p) {
  if (run.iterates.size() < 2) {
    throw InvalidArgument("Taylor fit needs at least two iterates");
  }
  OdeParams q = p;
  q.P0 = run.iterates.front().values.front();

  const GridFunction& grid = run.iterates.front();
  std::vector<std::size_t> window;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double t = grid.time(k);
    if (t >= taylor_fit_lo && t <= taylor_fit_hi) window.push_back(k);
  }
  const std::size_t k_hi = window.empty() ? 0 : window.back() + 1;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  std::vector<TaylorFit> fits;
  for (std::size_t n = 0; n < run.iterates.size(); ++n) {
    const GridFunction& f = run.iterates[n];
    const double curvature = n == 0 ? 0.0 : integrand_curvature(q, run.iterates[n - 1], k_hi);

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t used = 0;
    for (std::size_t k : window) {
      const double t = f.time(k);
      const double x = f.values[k];
      const double err = std::abs(x - exact_solution(q, t));
      const double floor =
          64.0 * eps * std::max(1.0, std::abs(x)) + t * f.dt * f.dt * curvature / 12.0;
      if (!(err > 2.0 * floor)) continue;
      const double lx = std::log(t);
      const double ly = std::log(err);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
      ++used;
    }
    TaylorFit fit{std::nullopt, used};
    if (used >= 2) {
      const double nn = static_cast<double>(used);
      fit.exponent = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
    }
    fits.push_back(fit);
  }
  return fits;
}

std::size_t taylor_agreement_order(const PicardRun& run, const OdeParams& p) {
  const auto fits = taylor_fits(run, p);
  for (std::size_t n = 0; n < fits.size(); ++n) {
    if (fits[n].exponent && *fits[n].exponent < static_cast<double>(n + 1) - 0.2) {
      return n;
    }
  }
  return fits.size();
}

const char* to_string(BridgeClass c) noexcept {
  switch (c) {
  case BridgeClass::Converged: return "Converged";
  case BridgeClass::Cycle: return "Cycle";
  case BridgeClass::NonConvergent: return "NonConvergent";
  }
  return "?";
}

namespace {

double polish_fixed_point(const MapParams& p, double x) {
  try {
    return refine_cycle(p, std::clamp(x, 0.0, 1.0), 1).points.front();
  } catch (const Error&) {
    return x;
  }
}

} // namespace

BridgeOutcome scalar_bridge(double a, const BridgeOptions& opts) {
  if (!(opts.x_start > 0.0 && opts.x_start < 1.0)) {
    throw InvalidArgument("scalar_bridge needs x_start in (0, 1)");
  }
  if (opts.max_iter < 1000) {
    throw InvalidArgument("scalar_bridge needs max_iter >= 1000");
  }
  const MapParams p = MapParams::unchecked(a);
  BridgeOutcome out;
  out.a = a;
  out.classification = BridgeClass::NonConvergent;

  std::vector<double> traj;
  traj.reserve(opts.max_iter + 1);
  double x = opts.x_start;
  traj.push_back(x);

  auto finish = [&](BridgeOutcome& o) -> BridgeOutcome {
    if (opts.keep_trajectory) o.trajectory = std::move(traj);
    return std::move(o);
  };

  for (std::size_t n = 1; n <= opts.max_iter; ++n) {
    const double next = step(p, x);
    traj.push_back(next);
    out.steps = n;
    if (!(std::abs(next) <= escape_bound)) {
      return finish(out);
    }
    if (std::abs(next - x) < opts.tol) {
      out.classification = BridgeClass::Converged;
      out.limit = polish_fixed_point(p, next);
      return finish(out);
    }
    x = next;
  }

  const Orbit tail{p, opts.x_start, 0, traj, false, std::nullopt};
  if (traj.size() >= 2 * opts.max_period) {
    DetectOptions d;
    d.max_period = opts.max_period;
    if (auto cycle = detect_cycle(tail, d)) {
      if (cycle->period == 1) {
        out.classification = BridgeClass::Converged;
        out.limit = polish_fixed_point(p, cycle->points.front());
      } else {
        out.classification = BridgeClass::Cycle;
        out.period = cycle->period;
      }
    }
  }
  return finish(out);
}

std::vector<BridgeOutcome> breakdown_scan(double a_min, double a_max, std::size_t n_params,
                                          const BridgeOptions& opts, std::size_t workers) {
  if (!(a_min >= 0.0 && a_max <= 4.0)) {
    throw InvalidArgument("scan range must lie in [0, 4]");
  }
  const auto grid = uniform_grid(a_min, a_max, n_params);
  std::vector<BridgeOutcome> out(n_params);
  parallel_for(n_params, workers, [&](std::size_t i) { out[i] = scalar_bridge(grid[i], opts); });
  return out;
}

} // namespace logistic
