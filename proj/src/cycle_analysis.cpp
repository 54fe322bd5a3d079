#include "logistic/cycle_analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "logistic/error.hpp"

namespace logistic {
namespace {

struct Composite {
  double value;
  double slope;
};

// step^period(x) together with its derivative by the chain rule.
Composite compose(const MapParams& p, double x, std::size_t period) noexcept {
  double slope = 1.0;
  for (std::size_t i = 0; i < period; ++i) {
    slope *= derivative(p, x);
    x = step(p, x);
  }
  return {x, slope};
}

Cycle make_cycle(const MapParams& p, double x, std::size_t period) {
  Cycle c{period, {}, 0.0};
  c.points.reserve(period);
  for (std::size_t i = 0; i < period; ++i) {
    c.points.push_back(x);
    x = step(p, x);
  }
  c.multiplier = cycle_multiplier(p, c);
  return c;
}

// Bisection on h(x) = step^period(x) - x inside a window grown around x until
// h changes sign.
std::optional<double> bisect_near(const MapParams& p, double x, std::size_t period) {
  auto h = [&](double y) { return iterate(p, y, period) - y; };
  for (double w = 1e-3; w <= 1.0; w *= 2.0) {
    double lo = std::max(0.0, x - w);
    double hi = std::min(1.0, x + w);
    double hlo = h(lo);
    double hhi = h(hi);
    if (hlo == 0.0) return lo;
    if (hhi == 0.0) return hi;
    if ((hlo < 0.0) == (hhi < 0.0)) continue;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double hm = h(mid);
      if (std::abs(hm) < cycle_residual_tol) return mid;
      if ((hm < 0.0) == (hlo < 0.0)) {
        lo = mid;
        hlo = hm;
      } else {
        hi = mid;
      }
    }
    return std::abs(hlo) < std::abs(h(hi)) ? lo : hi;
  }
  return std::nullopt;
}

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && std::has_single_bit(n); }

} // namespace

double cycle_multiplier(const MapParams& p, const Cycle& c) noexcept {
  double m = 1.0;
  for (double x : c.points) {
    m *= derivative(p, x);
  }
  return m;
}

bool is_minimal_period(const MapParams& p, double x, std::size_t period, double tol) noexcept {
  for (std::size_t d = 1; d < period; ++d) {
    if (period % d == 0 && std::abs(iterate(p, x, d) - x) < tol) {
      return false;
    }
  }
  return true;
}

std::optional<Cycle> detect_cycle(const Orbit& orbit, const DetectOptions& opts) {
  if (orbit.escaped) {
    throw InvalidArgument("cannot detect a cycle on an escaped orbit");
  }
  if (opts.max_period == 0 || !(opts.tol > 0.0)) {
    throw InvalidArgument("detect_cycle needs max_period >= 1 and tol > 0");
  }
  const auto& s = orbit.states;
  if (s.size() < 2 * opts.max_period) {
    throw InsufficientData("orbit has " + std::to_string(s.size()) + " states, need " +
                           std::to_string(2 * opts.max_period));
  }

  const std::size_t n = s.size();
  for (std::size_t p = 1; p <= opts.max_period; ++p) {
    bool closes = true;
    for (std::size_t i = 0; i < p && closes; ++i) {
      closes = std::abs(s[n - 1 - i] - s[n - 1 - i - p]) < opts.tol;
    }
    if (!closes || !is_minimal_period(orbit.params, s[n - p], p)) {
      continue;
    }

    Cycle raw{p, std::vector<double>(s.end() - static_cast<std::ptrdiff_t>(p), s.end()), 0.0};
    raw.multiplier = cycle_multiplier(orbit.params, raw);
    if (!opts.polish) {
      return raw;
    }
    try {
      Cycle refined = refine_cycle(orbit.params, raw.points.front(), p);
      for (std::size_t i = 0; i < p; ++i) {
        if (std::abs(refined.points[i] - raw.points[i]) >= 1e-6) {
          return raw;
        }
      }
      return refined;
    } catch (const Error&) {
      return raw;
    }
  }
  return std::nullopt;
}

Cycle refine_cycle(const MapParams& p, double guess, std::size_t period) {
  if (!(guess >= 0.0 && guess <= 1.0) || period == 0) {
    throw InvalidArgument("refine_cycle needs guess in [0, 1] and period >= 1");
  }

  double x = guess;
  bool converged = false;
  for (int it = 0; it <= 100; ++it) {
    const Composite c = compose(p, x, period);
    const double residual = c.value - x;
    if (std::abs(residual) < cycle_residual_tol) {
      converged = true;
      break;
    }
    if (it == 100) break;
    const double slope = c.slope - 1.0;
    if (std::abs(slope) < 1e-10) {
      const auto root = bisect_near(p, x, period);
      if (!root) break;
      x = *root;
      continue;
    }
    x = std::clamp(x - residual / slope, 0.0, 1.0);
  }
  if (!converged) {
    throw NoConvergence("Newton refinement of period " + std::to_string(period) +
                        " from " + std::to_string(guess) + " did not converge");
  }
  if (!is_minimal_period(p, x, period)) {
    throw NotMinimalPeriod("point " + std::to_string(x) + " closes at a divisor of period " +
                           std::to_string(period));
  }
  return make_cycle(p, x, period);
}

double critical_return(double a, std::size_t period) noexcept {
  const MapParams p = MapParams::unchecked(a);
  return iterate(p, MapParams::critical_point, period) - MapParams::critical_point;
}

double find_superstable(std::pair<double, double> bracket, std::size_t period) {
  if (!is_power_of_two(period)) {
    throw InvalidArgument("superstable period must be a power of two");
  }
  double lo = std::min(bracket.first, bracket.second);
  double hi = std::max(bracket.first, bracket.second);
  double glo = critical_return(lo, period);
  double ghi = critical_return(hi, period);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if ((glo < 0.0) == (ghi < 0.0)) {
    throw BadBracket("g(a) has the same sign at " + std::to_string(lo) + " and " +
                     std::to_string(hi));
  }

  // Halve until the bracket is two adjacent doubles; that is always more than
  // 60 halvings for brackets wider than ~1e-6.
  for (;;) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double gm = critical_return(mid, period);
    if (gm == 0.0) return mid;
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
      ghi = gm;
    }
  }

  double best = std::abs(glo) <= std::abs(ghi) ? lo : hi;
  double gbest = std::min(std::abs(glo), std::abs(ghi));
  if (ghi != glo) {
    const double secant = lo - glo * (hi - lo) / (ghi - glo);
    if (secant >= lo && secant <= hi) {
      const double gs = std::abs(critical_return(secant, period));
      if (gs < gbest) {
        best = secant;
      }
    }
  }
  return best;
}

SuperstableSequence superstable_ladder(std::size_t max_period) {
  if (!is_power_of_two(max_period) || max_period > max_ladder_period) {
    throw InvalidArgument("ladder depth must be a power of two no larger than " +
                          std::to_string(max_ladder_period));
  }

  SuperstableSequence seq;
  // Scan start for period 1: the interior fixed point exists from a = 1 on.
  double prev = 1.0;
  double prev_gap = 0.0;
  for (std::size_t period = 1; period <= max_period; period *= 2) {
    // Every superstable parameter of a divisor period is also a root of g, so
    // the scan starts one grid step past the previous rung. The grid has to
    // resolve the next gap, which shrinks by ~4.67 per rung.
    const double h = prev_gap > 0.0 ? std::min(1e-3, prev_gap / 100.0) : 1e-3;
    double left = prev + h;
    double gleft = critical_return(left, period);
    std::optional<std::pair<double, double>> bracket;
    for (double right = left + h; right <= 3.6; right = left + h) {
      const double gright = critical_return(right, period);
      if ((gleft < 0.0) != (gright < 0.0) || gright == 0.0) {
        bracket = {left, right};
        break;
      }
      left = right;
      gleft = gright;
    }
    if (!bracket) {
      throw NoConvergence("no sign change of g for period " + std::to_string(period));
    }
    const double a = find_superstable(*bracket, period);
    if (!seq.entries.empty()) {
      prev_gap = a - seq.entries.back().a;
    }
    seq.entries.push_back({period, a});
    prev = a;
  }
  return seq;
}

std::vector<double> feigenbaum_delta(const SuperstableSequence& seq) {
  const auto& e = seq.entries;
  if (e.size() < 3) {
    throw InvalidArgument("feigenbaum_delta needs at least three ladder entries");
  }
  for (std::size_t k = 1; k < e.size(); ++k) {
    if (std::abs(e[k].a - e[k - 1].a) < 1e-14) {
      throw DegenerateSpacing("entries " + std::to_string(k - 1) + " and " + std::to_string(k) +
                              " coincide");
    }
  }
  std::vector<double> deltas;
  for (std::size_t k = 1; k + 1 < e.size(); ++k) {
    deltas.push_back((e[k].a - e[k - 1].a) / (e[k + 1].a - e[k].a));
  }
  return deltas;
}

double accumulation_point(const SuperstableSequence& seq, double delta) {
  const auto& e = seq.entries;
  if (e.size() < 2 || !(delta > 1.0)) {
    throw InvalidArgument("accumulation_point needs two entries and delta > 1");
  }
  const double last = e.back().a;
  const double prev = e[e.size() - 2].a;
  return last + (last - prev) / (delta - 1.0);
}

} // namespace logistic
