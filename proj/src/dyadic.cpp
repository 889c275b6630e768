#include "exsteer/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace exsteer {

DyadicSchedule dyadic_schedule(double horizon, int n_stages) {
  if (!(horizon > 0.0)) throw ParameterError("dyadic_schedule: horizon must be > 0");
  if (n_stages < 1) throw ParameterError("dyadic_schedule: n_stages must be >= 1");
  DyadicSchedule s;
  s.horizon = horizon;
  s.tau.resize(n_stages);
  s.t.resize(n_stages);
  double scale = 1.0;
  for (int n = 1; n <= n_stages; ++n) {
    scale *= 0.5;
    s.tau[n - 1] = horizon * scale;
    s.t[n - 1] = horizon * (1.0 - scale);
  }
  return s;
}

double stage_error_bound(const SystemSpec& sys, const State& eta, const Nonlinearity& f,
                         double tau) {
  if (!(tau > 0.0)) throw ParameterError("stage_error_bound: tau must be > 0");
  const double drift = norm(sub(apply_semigroup(sys, tau, eta, Direction::forward), eta));
  constexpr double evolution_bound = 1.0;  // contraction systems
  return drift + f.bound() * evolution_bound * tau;
}

namespace {

double fd_derivative_norm(const GridFunction& x, int stride) {
  // Forward differences on the grid coarsened by `stride`.
  const Grid& g = x.grid();
  const double h = stride * g.spacing();
  double acc = 0.0;
  for (int i = 0; i + stride <= g.n_cells; i += stride) {
    const double d = (x[i + stride] - x[i]) / h;
    acc += h * d * d;
  }
  return std::sqrt(acc);
}

double component_at(const State& s, int node, bool second) {
  if (is_pair(s)) {
    const auto& p = std::get<PairFunction>(s);
    return second ? p.x2[node] : p.x1[node];
  }
  return std::get<GridFunction>(s)[node];
}

}  // namespace

TargetDiagnostics validate_target(const SystemSpec& sys, const State& eta, double eps) {
  if (is_pair(eta) != sys.is_pair()) {
    throw TypeMismatchError("validate_target: state kind does not match system variant");
  }
  (void)eps;
  const Grid& g = grid_of(eta);
  TargetDiagnostics d;
  const int last = g.n_cells;
  d.value_at_one = std::abs(component_at(eta, last, false));
  d.value_at_zero = std::abs(component_at(eta, 0, false));
  if (is_pair(eta)) {
    d.value_at_one = std::max(d.value_at_one, std::abs(component_at(eta, last, true)));
    d.value_at_zero = std::max(d.value_at_zero, std::abs(component_at(eta, 0, true)));
  }

  // Derivative norms on grids coarsened 4x, 2x, 1x. A square-integrable
  // derivative keeps them level; a jump makes them grow ~sqrt(2) per halving.
  auto norms_for = [&](const GridFunction& x) {
    std::vector<double> out;
    for (int stride : {4, 2, 1}) {
      if (g.n_cells / stride >= 2) out.push_back(fd_derivative_norm(x, stride));
    }
    return out;
  };
  std::vector<double> norms;
  if (is_pair(eta)) {
    const auto& p = std::get<PairFunction>(eta);
    auto n1 = norms_for(p.x1);
    auto n2 = norms_for(p.x2);
    norms.resize(n1.size());
    for (std::size_t i = 0; i < n1.size(); ++i) norms[i] = std::hypot(n1[i], n2[i]);
  } else {
    norms = norms_for(std::get<GridFunction>(eta));
  }
  d.derivative_norms = norms;
  d.growth_ratio = (norms.size() >= 2 && norms.front() > 0.0)
                       ? norms.back() / norms.front()
                       : 1.0;

  const double scale = std::max(1.0, norm(eta));
  const bool boundary_ok = d.value_at_one <= 1e-9 * scale;
  const bool derivative_ok = d.growth_ratio <= 1.5;
  d.pass = boundary_ok && derivative_ok;
  return d;
}

const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::achieved_tolerance: return "stop_tol";
    case StopReason::grid_floor: return "grid_floor";
    case StopReason::stage_limit: return "stage_limit";
  }
  return "unknown";
}

SteeringOutcome steer_semilinear(const SystemSpec& sys, const State& xi, const State& eta,
                                 const Nonlinearity& f, double eps, int n_stages,
                                 int n_time_steps_per_stage, double stop_tol, int max_picard,
                                 double tol_picard) {
  if (n_stages < 1) throw ParameterError("steer_semilinear: n_stages must be >= 1");
  if (is_pair(xi) != sys.is_pair() || is_pair(eta) != sys.is_pair()) {
    throw TypeMismatchError("steer_semilinear: state kind does not match system variant");
  }
  require_same_grid(grid_of(xi), grid_of(eta));
  const Grid& grid = grid_of(xi);
  const double horizon = sys.horizon;
  const DyadicSchedule schedule = dyadic_schedule(horizon, n_stages);

  ControlSignal control(sys);
  SteeringReport report;
  report.max_state_norm = norm(xi);
  Trajectory full;
  State current = xi;
  double t_prev = 0.0;
  double cumulative = 0.0;
  report.stop_reason = StopReason::stage_limit;

  for (int n = 1; n <= n_stages; ++n) {
    const double tau = schedule.tau[n - 1];
    const double t_end = schedule.t[n - 1];
    if (tau < 2.0 * grid.spacing()) {
      report.stop_reason = StopReason::grid_floor;
      break;
    }

    ControlSegment segment = make_steering_segment(sys, current, eta, t_prev, t_end, eps);
    control.append(segment);

    MildResult stage;
    try {
      stage = solve_mild(
          sys, current,
          [&](double t) { return control.evaluate_in_segment(segment, grid, t); }, f, t_prev,
          t_end, n_time_steps_per_stage, max_picard, tol_picard);
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("stage " + std::to_string(n) + ": " + e.what(), e.last_gap(),
                             e.iterations());
    }

    current = stage.trajectory.terminal();
    const std::size_t skip = full.stamps.empty() ? 0 : 1;
    full.stamps.insert(full.stamps.end(), stage.trajectory.stamps.begin() + skip,
                       stage.trajectory.stamps.end());
    full.states.insert(full.states.end(), stage.trajectory.states.begin() + skip,
                       stage.trajectory.states.end());

    ControlSignal stage_signal(sys);
    stage_signal.append(segment);
    const double stage_energy = control_energy(stage_signal, grid, n_time_steps_per_stage);
    cumulative += stage_energy;

    StageRecord rec;
    rec.n = n;
    rec.tau = tau;
    rec.t_end = t_end;
    rec.err_vs_transported_target =
        partial_error(current, apply_semigroup(sys, tau, eta, Direction::forward), eps);
    rec.err_vs_target = partial_error(current, eta, eps);
    rec.bound = stage_error_bound(sys, eta, f, tau);
    rec.stage_energy = stage_energy;
    rec.cumulative_energy = cumulative;
    rec.picard_iterations = stage.picard_iterations;
    report.stages.push_back(rec);
    report.max_state_norm = std::max(report.max_state_norm, norm(current));

    t_prev = t_end;
    if (rec.err_vs_target <= stop_tol) {
      report.stop_reason = StopReason::achieved_tolerance;
      break;
    }
  }

  if (report.stages.empty()) {
    throw ParameterError("steer_semilinear: no stage ran (grid floor above tau_1)");
  }
  report.terminal_error = report.stages.back().err_vs_target;
  for (const auto& rec : report.stages) {
    if (rec.n >= 2) {
      report.fitted_energy_rate = std::max(report.fitted_energy_rate, rec.stage_energy / rec.tau);
    }
  }
  return SteeringOutcome{std::move(control), std::move(full), std::move(report)};
}

}  // namespace exsteer
