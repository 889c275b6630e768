#pragma once

#include "exsteer/semilinear.hpp"

namespace exsteer {

// Halving schedule: stage lengths tau_n = T / 2^n accumulate to
// t_n = T (1 - 2^{-n}) -> T.
struct DyadicSchedule {
  double horizon = 0.0;
  std::vector<double> tau;  // stage lengths, 1-based stage n at index n-1
  std::vector<double> t;    // stage end times
};

DyadicSchedule dyadic_schedule(double horizon, int n_stages);

// |S(tau) eta - eta| + M K tau with K = 1 for the built-in systems.
double stage_error_bound(const SystemSpec& sys, const State& eta, const Nonlinearity& f,
                         double tau);

// Diagnostic admissibility check for a steering target: boundary values and
// a finite-difference proxy for square-integrability of the derivative.
struct TargetDiagnostics {
  bool pass = false;
  double value_at_one = 0.0;        // must vanish for the checked domain
  double value_at_zero = 0.0;       // reported; nonzero degrades stage rates
  std::vector<double> derivative_norms;  // on coarsened grids, finest last
  double growth_ratio = 0.0;        // finest / coarsest derivative norm
};

TargetDiagnostics validate_target(const SystemSpec& sys, const State& eta, double eps);

struct StageRecord {
  int n = 0;
  double tau = 0.0;
  double t_end = 0.0;
  double err_vs_transported_target = 0.0;  // |L x_n - L S(tau_n) eta|
  double err_vs_target = 0.0;              // |L x_n - L eta|
  double bound = 0.0;                      // stage_error_bound(tau_n)
  double stage_energy = 0.0;
  double cumulative_energy = 0.0;
  int picard_iterations = 0;
};

enum class StopReason { achieved_tolerance, grid_floor, stage_limit };

const char* to_string(StopReason r);

struct SteeringReport {
  std::vector<StageRecord> stages;
  double terminal_error = 0.0;  // |L x_N - L eta| at the stopping stage
  StopReason stop_reason = StopReason::stage_limit;
  double fitted_energy_rate = 0.0;  // max of stage_energy_n / tau_n over n >= 2
  double max_state_norm = 0.0;      // max |x_n| over the logged stages (incl. x_0)
};

struct SteeringOutcome {
  ControlSignal control;
  Trajectory trajectory;
  SteeringReport report;
};

// Staged minimum-norm steering of the semilinear system: stage n applies the
// linear steering control for the transported target over [t_{n-1}, t_n] and
// advances the state with the mild solver. Stops when |L x_n - L eta| drops
// below stop_tol, when the next stage length falls under twice the grid
// spacing, or after n_stages stages.
SteeringOutcome steer_semilinear(const SystemSpec& sys, const State& xi, const State& eta,
                                 const Nonlinearity& f, double eps, int n_stages,
                                 int n_time_steps_per_stage, double stop_tol,
                                 int max_picard = kDefaultMaxPicard,
                                 double tol_picard = kDefaultPicardTol);

}  // namespace exsteer
