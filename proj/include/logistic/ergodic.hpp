#pragma once

// Long-run statistics of the logistic map: Lyapunov exponents, bifurcation
// diagram sampling over a parameter grid, and attractor cluster counts.

#include <cstddef>
#include <optional>
#include <vector>

#include "logistic/map_core.hpp"

namespace logistic {

inline constexpr std::size_t default_transient = 10000;
inline constexpr std::size_t default_keep = 256;

struct LyapunovResult {
  double a;
  /// Empty when some |f'(x_i)| fell below 1e-300 (superstable orbit): the
  /// exponent is minus infinity.
  std::optional<double> exponent;
  std::size_t n_used;

  bool negative_infinity() const noexcept { return !exponent.has_value(); }
};

/// Mean of ln|a (1 - 2 x_i)| over n post-transient states.
/// Throws EscapedOrbit if the trajectory leaves [0, 1].
LyapunovResult lyapunov(const MapParams& p, double x0, std::size_t n,
                        std::size_t transient = default_transient);

/// How each scan column picks its initial state.
struct SeedPolicy {
  double x0 = MapParams::critical_point;
};

struct BifurcationData {
  std::vector<double> a_values;
  std::vector<std::vector<double>> samples;
  std::vector<bool> escaped;

  std::size_t size() const noexcept { return a_values.size(); }
};

struct ScanOptions {
  std::size_t transient = default_transient;
  std::size_t keep = default_keep;
  SeedPolicy seed{};
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t workers = 1;
};

/// a_i = a_min + i (a_max - a_min) / (n_params - 1).
std::vector<double> uniform_grid(double a_min, double a_max, std::size_t n_params);

/// One column of a bifurcation diagram. Works for out-of-domain parameters;
/// an escaped orbit yields empty samples and `escaped = true`.
struct ColumnSample {
  std::vector<double> samples;
  bool escaped;
};
ColumnSample sample_column(const MapParams& p, std::size_t transient, std::size_t keep,
                           SeedPolicy seed = {});

BifurcationData bifurcation_scan(double a_min, double a_max, std::size_t n_params,
                                 const ScanOptions& opts = {});

/// Single-linkage cluster count of the samples at threshold tol.
std::size_t attractor_cardinality(std::vector<double> samples, double tol);

/// Runs fn(i) for i in [0, count) on `workers` threads. Each index is handled
/// by exactly one call, so results written per index are independent of the
/// worker count.
template <class Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn);

} // namespace logistic

#include "logistic/detail/parallel_for.hpp"
