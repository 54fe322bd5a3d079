#include "logistic/ergodic.hpp"

#include <algorithm>
#include <cmath>

#include "logistic/error.hpp"

namespace logistic {

LyapunovResult lyapunov(const MapParams& p, double x0, std::size_t n, std::size_t transient) {
  if (!(x0 > 0.0 && x0 < 1.0)) {
    throw InvalidArgument("lyapunov needs x0 in (0, 1)");
  }
  if (n < 1000) {
    throw InvalidArgument("lyapunov needs n >= 1000");
  }
  auto check = [](double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw EscapedOrbit("trajectory left [0, 1]");
  };

  double x = x0;
  for (std::size_t i = 0; i < transient; ++i) {
    x = step(p, x);
    check(x);
  }
  double sum = 0.0;
  bool superstable = false;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::abs(derivative(p, x));
    if (d < 1e-300) {
      superstable = true;
    } else {
      sum += std::log(d);
    }
    x = step(p, x);
    check(x);
  }
  if (superstable) {
    return {p.a(), std::nullopt, n};
  }
  return {p.a(), sum / static_cast<double>(n), n};
}

std::vector<double> uniform_grid(double a_min, double a_max, std::size_t n_params) {
  if (n_params < 2 || !(a_min < a_max)) {
    throw InvalidArgument("grid needs n_params >= 2 and a_min < a_max");
  }
  std::vector<double> grid(n_params);
  const double span = a_max - a_min;
  const double last = static_cast<double>(n_params - 1);
  for (std::size_t i = 0; i < n_params; ++i) {
    grid[i] = a_min + span * (static_cast<double>(i) / last);
  }
  return grid;
}

ColumnSample sample_column(const MapParams& p, std::size_t transient, std::size_t keep,
                           SeedPolicy seed) {
  Orbit o = orbit(p, seed.x0, keep, transient);
  if (o.escaped) {
    return {{}, true};
  }
  return {std::move(o.states), false};
}

BifurcationData bifurcation_scan(double a_min, double a_max, std::size_t n_params,
                                 const ScanOptions& opts) {
  if (!(a_min >= 0.0 && a_max <= 4.0)) {
    throw InvalidArgument("scan range must lie in [0, 4]");
  }
  if (opts.keep < 1) {
    throw InvalidArgument("keep must be at least 1");
  }
  BifurcationData data;
  data.a_values = uniform_grid(a_min, a_max, n_params);
  data.samples.resize(n_params);
  std::vector<char> escaped(n_params, 0);

  parallel_for(n_params, opts.workers, [&](std::size_t i) {
    ColumnSample col = sample_column(MapParams(data.a_values[i]), opts.transient, opts.keep,
                                     opts.seed);
    data.samples[i] = std::move(col.samples);
    escaped[i] = col.escaped ? 1 : 0;
  });

  data.escaped.assign(escaped.begin(), escaped.end());
  return data;
}

std::size_t attractor_cardinality(std::vector<double> samples, double tol) {
  if (samples.empty() || !(tol > 0.0)) {
    throw InvalidArgument("attractor_cardinality needs samples and tol > 0");
  }
  std::sort(samples.begin(), samples.end());
  std::size_t clusters = 1;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i] - samples[i - 1] > tol) {
      ++clusters;
    }
  }
  return clusters;
}

} // namespace logistic
