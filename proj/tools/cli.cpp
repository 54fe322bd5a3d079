#include "logistic/cli.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <string_view>

#include "CLI11.hpp"

#include "logistic/continuous_logistic.hpp"
#include "logistic/cycle_analysis.hpp"
#include "logistic/ergodic.hpp"
#include "logistic/error.hpp"
#include "logistic/map_core.hpp"
#include "logistic/output.hpp"
#include "logistic/picard_bridge.hpp"

namespace logistic::cli {
namespace {

// Raised when a subcommand finished its outputs but convergence was demanded
// and not reached.
struct NotConverged {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

void require_map_param(double a) {
  require(a >= 0.0 && a <= 4.0, "--a must lie in [0, 4]");
}

// Either an explicit --a list or an --a-min/--a-max/--n-params grid.
struct ParamGrid {
  std::vector<double> a;
  double a_min = 0.0;
  double a_max = 0.0;
  std::size_t n_params = 0;

  void add_options(CLI::App& app) {
    app.add_option("--a", a, "Parameter value(s)");
    app.add_option("--a-min", a_min, "Grid start (with --a-max, --n-params)");
    app.add_option("--a-max", a_max, "Grid end");
    app.add_option("--n-params", n_params, "Grid size");
  }

  std::vector<double> values() const {
    if (!a.empty()) {
      require(n_params == 0, "give either --a or a grid, not both");
      for (double v : a) require_map_param(v);
      return a;
    }
    require(n_params >= 2, "give --a or --a-min/--a-max/--n-params (n-params >= 2)");
    require(a_min >= 0.0 && a_min < a_max && a_max <= 4.0,
            "grid needs 0 <= a-min < a-max <= 4");
    return uniform_grid(a_min, a_max, n_params);
  }
};

struct OrbitCmd {
  double a = 0.0;
  double x0 = 0.5;
  std::size_t n = 100;
  std::size_t transient = default_transient;
  std::string out;

  void add(CLI::App& app) {
    app.add_option("--a", a, "Map parameter in [0, 4]")->required();
    app.add_option("--x0", x0, "Initial state in [0, 1]");
    app.add_option("--n", n, "Recorded states");
    app.add_option("--transient", transient, "Discarded leading steps");
    app.add_option("--out", out, "CSV output (step,x)")->required();
  }

  void run(std::ostream& err) const {
    require_map_param(a);
    require(x0 >= 0.0 && x0 <= 1.0, "--x0 must lie in [0, 1]");
    require(n >= 1, "--n must be at least 1");
    const Orbit o = orbit(MapParams(a), x0, n, transient);
    CsvWriter csv({"step", "x"});
    for (std::size_t k = 0; k < o.size(); ++k) {
      csv.cell(o.transient + k).cell(o.states[k]).end_row();
    }
    if (o.escaped) err << "orbit escaped after " << o.size() << " recorded states\n";
    write_atomic(out, csv.str());
  }
};

struct FixedPointsCmd {
  ParamGrid grid;
  std::string out;

  void add(CLI::App& app) {
    grid.add_options(app);
    app.add_option("--out", out, "CSV output (a,x_star,classification)")->required();
  }

  void run(std::ostream&) const {
    CsvWriter csv({"a", "x_star", "classification"});
    for (double a : grid.values()) {
      const MapParams p(a);
      const auto points = fixed_points(p);
      // The origin attracts for a < 1 and repels for a > 1.
      const FixedPointClass origin = a < 1.0    ? FixedPointClass::ExtinctionStable
                                     : a == 1.0 ? FixedPointClass::Marginal
                                                : FixedPointClass::Unstable;
      csv.cell(a).cell(points[0]).cell(to_string(origin)).end_row();
      if (points.size() > 1) {
        csv.cell(a).cell(points[1]).cell(to_string(classify_fixed_point(p))).end_row();
      }
    }
    write_atomic(out, csv.str());
  }
};

struct CycleCmd {
  double a = 0.0;
  double x0 = 0.3;
  std::size_t n = 2048;
  std::size_t transient = default_transient;
  double tol = 1e-8;
  std::size_t max_period = 64;
  bool require_cycle = false;
  std::string out;

  void add(CLI::App& app) {
    app.add_option("--a", a, "Map parameter in [0, 4]")->required();
    app.add_option("--x0", x0, "Initial state in [0, 1]");
    app.add_option("--n", n, "Orbit length inspected (>= 2 max-period)");
    app.add_option("--transient", transient, "Discarded leading steps");
    app.add_option("--tol", tol, "Tail matching tolerance");
    app.add_option("--max-period", max_period, "Largest period tried");
    app.add_flag("--require-cycle", require_cycle, "Exit 3 when no cycle is found");
    app.add_option("--out", out, "CSV output (a,period,point_index,x,multiplier)")->required();
  }

  void run(std::ostream& err) const {
    require_map_param(a);
    require(x0 >= 0.0 && x0 <= 1.0, "--x0 must lie in [0, 1]");
    require(tol > 0.0, "--tol must be positive");
    require(max_period >= 1 && n >= 2 * max_period, "--n must be at least 2 * --max-period");
    DetectOptions opts;
    opts.tol = tol;
    opts.max_period = max_period;
    const auto cycle = detect_cycle(orbit(MapParams(a), x0, n, transient), opts);
    CsvWriter csv({"a", "period", "point_index", "x", "multiplier"});
    if (cycle) {
      for (std::size_t i = 0; i < cycle->period; ++i) {
        csv.cell(a).cell(cycle->period).cell(i).cell(cycle->points[i]).cell(cycle->multiplier);
        csv.end_row();
      }
    }
    write_atomic(out, csv.str());
    if (!cycle) {
      err << "no cycle of period <= " << max_period << " on the orbit tail\n";
      if (require_cycle) throw NotConverged{"cycle required"};
    }
  }
};

void require_ladder_depth(std::size_t max_period) {
  require(max_period >= 1 && (max_period & (max_period - 1)) == 0 &&
              max_period <= max_ladder_period,
          "--max-period must be a power of two <= " + std::to_string(max_ladder_period));
}

struct SuperstableCmd {
  std::size_t max_period = 128;
  std::string out;

  void add(CLI::App& app) {
    app.add_option("--max-period", max_period, "Deepest period 2^k (<= 256)");
    app.add_option("--out", out, "CSV output (k,period,a_k)")->required();
  }

  void run(std::ostream&) const {
    require_ladder_depth(max_period);
    const auto seq = superstable_ladder(max_period);
    CsvWriter csv({"k", "period", "a_k"});
    for (std::size_t k = 0; k < seq.entries.size(); ++k) {
      csv.cell(k).cell(seq.entries[k].period).cell(seq.entries[k].a).end_row();
    }
    write_atomic(out, csv.str());
  }
};

struct FeigenbaumCmd {
  std::size_t max_period = 128;
  std::string out;

  void add(CLI::App& app) {
    app.add_option("--max-period", max_period, "Deepest period 2^k (4 .. 256)");
    app.add_option("--out", out, "CSV output (k,delta_k,a_inf_estimate)")->required();
  }

  void run(std::ostream&) const {
    require_ladder_depth(max_period);
    require(max_period >= 4, "--max-period must be at least 4");
    const auto seq = superstable_ladder(max_period);
    const auto deltas = feigenbaum_delta(seq);
    CsvWriter csv({"k", "delta_k", "a_inf_estimate"});
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      // delta_k uses entries k-1, k, k+1; extrapolate from entries up to k+1.
      const std::size_t k = i + 1;
      SuperstableSequence prefix{{seq.entries.begin(),
                                  seq.entries.begin() + static_cast<std::ptrdiff_t>(k + 2)}};
      csv.cell(k).cell(deltas[i]).cell(accumulation_point(prefix, deltas[i])).end_row();
    }
    write_atomic(out, csv.str());
  }
};

struct LyapunovCmd {
  ParamGrid grid;
  double x0 = 0.3;
  std::size_t n = 100000;
  std::size_t transient = default_transient;
  std::size_t workers = 1;
  std::string out;

  void add(CLI::App& app) {
    grid.add_options(app);
    app.add_option("--x0", x0, "Initial state in (0, 1)");
    app.add_option("--n", n, "Averaged steps (>= 1000)");
    app.add_option("--transient", transient, "Discarded leading steps");
    app.add_option("--workers", workers, "Threads (0 = all cores)");
    app.add_option("--out", out, "CSV output (a,exponent,n_used)")->required();
  }

  void run(std::ostream&) const {
    require(x0 > 0.0 && x0 < 1.0, "--x0 must lie in (0, 1)");
    require(n >= 1000, "--n must be at least 1000");
    const auto as = grid.values();
    std::vector<LyapunovResult> results(as.size());
    parallel_for(as.size(), workers,
                 [&](std::size_t i) { results[i] = lyapunov(MapParams(as[i]), x0, n, transient); });
    CsvWriter csv({"a", "exponent", "n_used"});
    for (const auto& r : results) {
      csv.cell(r.a);
      if (r.exponent) {
        csv.cell(*r.exponent);
      } else {
        csv.cell(std::string_view("-inf"));
      }
      csv.cell(r.n_used).end_row();
    }
    write_atomic(out, csv.str());
  }
};

struct BifurcateCmd {
  double a_min = 2.8;
  double a_max = 4.0;
  std::size_t n_params = 1000;
  std::size_t transient = default_transient;
  std::size_t keep = default_keep;
  double x0 = MapParams::critical_point;
  std::size_t height = 512;
  std::size_t workers = 1;
  std::string png_out;
  std::string csv_out;

  void add(CLI::App& app) {
    app.add_option("--a-min", a_min, "Grid start");
    app.add_option("--a-max", a_max, "Grid end");
    app.add_option("--n-params", n_params, "Grid size (image width)");
    app.add_option("--transient", transient, "Discarded leading steps per column");
    app.add_option("--keep", keep, "Recorded states per column");
    app.add_option("--x0", x0, "Initial state per column");
    app.add_option("--height", height, "Image height in pixels");
    app.add_option("--workers", workers, "Threads (0 = all cores)");
    app.add_option("--png-out", png_out, "Diagram output, binary PGM (P5)");
    app.add_option("--csv-out", csv_out, "CSV output (a,sample_index,x,escaped)");
  }

  void run(std::ostream&) const {
    require(!png_out.empty() || !csv_out.empty(), "give --png-out and/or --csv-out");
    require(a_min >= 0.0 && a_min < a_max && a_max <= 4.0,
            "grid needs 0 <= a-min < a-max <= 4");
    require(n_params >= 2, "--n-params must be at least 2");
    require(keep >= 1, "--keep must be at least 1");
    require(height >= 2, "--height must be at least 2");
    require(x0 >= 0.0 && x0 <= 1.0, "--x0 must lie in [0, 1]");

    ScanOptions opts;
    opts.transient = transient;
    opts.keep = keep;
    opts.seed.x0 = x0;
    opts.workers = workers;
    const auto data = bifurcation_scan(a_min, a_max, n_params, opts);

    if (!png_out.empty()) {
      write_atomic(png_out, render_bifurcation_pgm(data, height));
    }
    if (!csv_out.empty()) {
      CsvWriter csv({"a", "sample_index", "x", "escaped"});
      for (std::size_t i = 0; i < data.size(); ++i) {
        if (data.escaped[i]) {
          csv.cell(data.a_values[i]).empty().empty().cell(std::string_view("1")).end_row();
          continue;
        }
        for (std::size_t s = 0; s < data.samples[i].size(); ++s) {
          csv.cell(data.a_values[i]).cell(s).cell(data.samples[i][s]);
          csv.cell(std::string_view("0")).end_row();
        }
      }
      write_atomic(csv_out, csv.str());
    }
  }
};

struct OdeCmd {
  OdeParams params{1.0, 1.0, 0.5};
  double t_end = 1.0;
  double dt = 0.1;
  std::string out;

  void add(CLI::App& app) {
    app.add_option("--r", params.r, "Growth rate r > 0");
    app.add_option("--M", params.M, "Maximum sustainable population M > 0");
    app.add_option("--P0", params.P0, "Initial population >= 0");
    app.add_option("--t-end", t_end, "Integration horizon");
    app.add_option("--dt", dt, "RK4 step");
    app.add_option("--out", out, "CSV output (t,P_exact,P_rk4,abs_err)")->required();
  }

  void run(std::ostream&) const {
    params.validate();
    require(t_end > 0.0 && dt > 0.0 && dt <= t_end, "need t-end > 0 and 0 < dt <= t-end");
    const auto sol = rk4_integrate(params, t_end, dt);
    CsvWriter csv({"t", "P_exact", "P_rk4", "abs_err"});
    for (std::size_t k = 0; k < sol.values.size(); ++k) {
      const double t = sol.time(k);
      const double exact = exact_solution(params, t);
      csv.cell(t).cell(exact).cell(sol.values[k]).cell(std::abs(sol.values[k] - exact)).end_row();
    }
    write_atomic(out, csv.str());
  }
};

struct PicardCmd {
  double r = 1.0;
  double M = 1.0;
  double x0 = 0.5;
  double horizon = 0.0;
  std::size_t intervals = 128;
  double tol = 1e-10;
  std::size_t max_iter = 100;
  bool require_converged = false;
  std::string out;

  void add(CLI::App& app) {
    app.add_option("--r", r, "Growth rate r > 0");
    app.add_option("--M", M, "Maximum sustainable population M > 0");
    app.add_option("--x0", x0, "Initial value x(0) >= 0");
    app.add_option("--T", horizon, "Interval length (0 = 0.5 / L)");
    app.add_option("--intervals", intervals, "Grid intervals on [0, T] (>= 8)");
    app.add_option("--tol", tol, "Sup-norm convergence tolerance");
    app.add_option("--max-iter", max_iter, "Picard step budget");
    app.add_flag("--require-converged", require_converged, "Exit 3 without convergence");
    app.add_option("--out", out, "CSV output (iterate,sup_delta,ratio,contraction_bound)")
        ->required();
  }

  void run(std::ostream& err) const {
    const OdeParams params{r, M, x0};
    params.validate();
    require(horizon >= 0.0, "--T must be non-negative");
    require(intervals >= 8, "--intervals must be at least 8");
    require(tol > 0.0 && max_iter >= 1, "need tol > 0 and max-iter >= 1");
    const double T = horizon > 0.0 ? horizon : default_picard_horizon(params, x0);
    const double dt = T / static_cast<double>(intervals);

    PicardRun result;
    bool converged = true;
    try {
      result = picard_iterate(params, x0, T, dt, tol, max_iter);
    } catch (const IterationBudgetExhausted& e) {
      result = e.partial_run();
      converged = false;
    }

    CsvWriter csv({"iterate", "sup_delta", "ratio", "contraction_bound"});
    for (std::size_t k = 0; k < result.deltas.size(); ++k) {
      csv.cell(k + 1).cell(result.deltas[k]);
      if (k > 0 && result.deltas[k - 1] > 0.0) {
        csv.cell(result.deltas[k] / result.deltas[k - 1]);
      } else {
        csv.empty();
      }
      csv.cell(result.contraction_bound).end_row();
    }
    write_atomic(out, csv.str());
    if (!converged) {
      err << "IterationBudgetExhausted: no convergence after " << max_iter << " Picard steps\n";
      if (require_converged) throw NotConverged{"convergence required"};
    }
  }
};

struct BridgeCmd {
  ParamGrid grid;
  BridgeOptions opts;
  std::size_t workers = 1;
  std::string out;

  void add(CLI::App& app) {
    grid.add_options(app);
    app.add_option("--x-start", opts.x_start, "Initial state in (0, 1)");
    app.add_option("--max-iter", opts.max_iter, "Iteration budget (>= 1000)");
    app.add_option("--tol", opts.tol, "Step size below which the iteration converged");
    app.add_option("--workers", workers, "Threads (0 = all cores)");
    app.add_option("--out", out, "CSV output (a,classification,limit_or_period,steps)")
        ->required();
  }

  void run(std::ostream&) const {
    require(opts.x_start > 0.0 && opts.x_start < 1.0, "--x-start must lie in (0, 1)");
    require(opts.max_iter >= 1000, "--max-iter must be at least 1000");
    require(opts.tol > 0.0, "--tol must be positive");
    const auto as = grid.values();
    BridgeOptions o = opts;
    o.keep_trajectory = false;
    std::vector<BridgeOutcome> results(as.size());
    parallel_for(as.size(), workers, [&](std::size_t i) { results[i] = scalar_bridge(as[i], o); });

    CsvWriter csv({"a", "classification", "limit_or_period", "steps"});
    for (const auto& r : results) {
      csv.cell(r.a).cell(to_string(r.classification));
      switch (r.classification) {
      case BridgeClass::Converged: csv.cell(r.limit); break;
      case BridgeClass::Cycle: csv.cell(r.period); break;
      case BridgeClass::NonConvergent: csv.empty(); break;
      }
      csv.cell(r.steps).end_row();
    }
    write_atomic(out, csv.str());
  }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logistic map and logistic ODE analyses", "logistic"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);

  OrbitCmd orbit_cmd;
  FixedPointsCmd fixed_cmd;
  CycleCmd cycle_cmd;
  SuperstableCmd superstable_cmd;
  FeigenbaumCmd feigenbaum_cmd;
  LyapunovCmd lyapunov_cmd;
  BifurcateCmd bifurcate_cmd;
  OdeCmd ode_cmd;
  PicardCmd picard_cmd;
  BridgeCmd bridge_cmd;

  std::vector<std::pair<CLI::App*, std::function<void()>>> commands;
  auto add = [&](auto& cmd, const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    cmd.add(*sub);
    commands.emplace_back(sub, [&cmd, &err] { cmd.run(err); });
  };
  add(orbit_cmd, "orbit", "Record an orbit of the logistic map");
  add(fixed_cmd, "fixed-points", "Fixed points and their stability");
  add(cycle_cmd, "cycle", "Detect a periodic orbit on an orbit tail");
  add(superstable_cmd, "superstable", "Superstable parameters of the period-doubling ladder");
  add(feigenbaum_cmd, "feigenbaum", "Feigenbaum ratios and accumulation point estimates");
  add(lyapunov_cmd, "lyapunov", "Lyapunov exponents");
  add(bifurcate_cmd, "bifurcate", "Bifurcation diagram as PGM and/or CSV");
  add(ode_cmd, "ode", "Logistic ODE: RK4 against the closed form");
  add(picard_cmd, "picard", "Picard successive approximation of the logistic ODE");
  add(bridge_cmd, "bridge", "Scalar iteration x <- a x (1 - x) classified per parameter");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidArguments;
  }

  try {
    for (auto& [sub, fn] : commands) {
      if (sub->parsed()) fn();
    }
  } catch (const NotConverged&) {
    return kNotConverged;
  } catch (const InvalidArgument& e) {
    err << e.what() << "\n";
    return kInvalidArguments;
  } catch (const ParameterOutOfDomain& e) {
    err << e.what() << "\n";
    return kInvalidArguments;
  } catch (const NoConvergence& e) {
    err << e.what() << "\n";
    return kNotConverged;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

} // namespace logistic::cli
