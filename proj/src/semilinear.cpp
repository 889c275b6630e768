#include "exsteer/semilinear.hpp"

#include <cmath>
#include <utility>

namespace exsteer {

Nonlinearity::Nonlinearity(std::string name, double bound, double lipschitz, Rule rule)
    : name_(std::move(name)), bound_(bound), lipschitz_(lipschitz), rule_(std::move(rule)) {
  if (bound_ < 0 || lipschitz_ < 0) {
    throw ParameterError("Nonlinearity: bound and Lipschitz constant must be >= 0");
  }
}

Nonlinearity Nonlinearity::zero() {
  return Nonlinearity("zero", 0.0, 0.0, [](double, double, double) { return 0.0; });
}

Nonlinearity Nonlinearity::sat_tanh(double gain) {
  return Nonlinearity("sat_tanh", std::abs(gain), std::abs(gain),
                      [gain](double, double x, double) { return gain * std::tanh(x); });
}

Nonlinearity Nonlinearity::bounded_mix(double gain) {
  return Nonlinearity("bounded_mix", std::abs(gain), std::abs(gain),
                      [gain](double, double x, double u) { return gain * std::sin(x + u); });
}

Nonlinearity Nonlinearity::by_name(const std::string& name,
                                   const std::map<std::string, double>& params) {
  auto gain = [&params]() {
    auto it = params.find("gamma");
    if (it == params.end()) it = params.find("gain");
    if (it == params.end()) throw ParameterError("nonlinearity needs a 'gamma' parameter");
    return it->second;
  };
  if (name == "zero") return zero();
  if (name == "sat_tanh") return sat_tanh(gain());
  if (name == "bounded_mix") return bounded_mix(gain());
  throw RegistryError("unknown nonlinearity '" + name + "'");
}

namespace {

GridFunction eval_component(const Nonlinearity::Rule& rule, double t, const GridFunction& x,
                            const GridFunction& u) {
  require_same_grid(x.grid(), u.grid());
  std::vector<double> out(x.size());
  for (int i = 0; i < x.size(); ++i) out[i] = rule(t, x[i], u[i]);
  return GridFunction(x.grid(), std::move(out));
}

}  // namespace

State Nonlinearity::evaluate(double t, const State& x, const State& u) const {
  if (is_pair(x) != is_pair(u)) throw TypeMismatchError("nonlinearity: mixed state kinds");
  if (is_pair(x)) {
    const auto& xp = std::get<PairFunction>(x);
    const auto& up = std::get<PairFunction>(u);
    return PairFunction(eval_component(rule_, t, xp.x1, up.x1),
                        eval_component(rule_, t, xp.x2, up.x2));
  }
  return eval_component(rule_, t, std::get<GridFunction>(x), std::get<GridFunction>(u));
}

MildResult solve_mild(const SystemSpec& sys, const State& xi,
                      const std::function<State(double)>& control, const Nonlinearity& f,
                      double t_start, double t_end, int n_time_steps, int max_picard,
                      double tol_picard) {
  if (!(t_start < t_end)) throw ParameterError("solve_mild: need t_start < t_end");
  if (n_time_steps < 2) throw ParameterError("solve_mild: n_time_steps must be >= 2");
  if (max_picard < 1) throw ParameterError("solve_mild: max_picard must be >= 1");
  if (is_pair(xi) != sys.is_pair()) {
    throw TypeMismatchError("solve_mild: state kind does not match system variant");
  }

  const int n = n_time_steps;
  const double dt = (t_end - t_start) / n;

  std::vector<double> stamps(n + 1);
  std::vector<State> controls;     // u(s_j)
  std::vector<State> forced;       // B u(s_j)
  std::vector<State> free_part;    // S(s_j - t0) xi
  controls.reserve(n + 1);
  forced.reserve(n + 1);
  free_part.reserve(n + 1);
  for (int j = 0; j <= n; ++j) {
    stamps[j] = t_start + j * dt;
    controls.push_back(control(stamps[j]));
    forced.push_back(apply_gain(sys, controls.back()));
    free_part.push_back(apply_semigroup(sys, j * dt, xi, Direction::forward));
  }

  std::vector<State> current = free_part;  // zeroth Picard iterate
  MildResult result;

  for (int sweep = 1; sweep <= max_picard; ++sweep) {
    // Integrand at the current iterate.
    std::vector<State> integrand;
    integrand.reserve(n + 1);
    for (int j = 0; j <= n; ++j) {
      State g = forced[j];
      if (!f.is_zero()) add_scaled(g, 1.0, f.evaluate(stamps[j], current[j], controls[j]));
      integrand.push_back(std::move(g));
    }

    std::vector<State> next;
    next.reserve(n + 1);
    next.push_back(xi);
    for (int j = 1; j <= n; ++j) {
      State acc = free_part[j];
      for (int i = 0; i <= j; ++i) {
        const double w = (i == 0 || i == j) ? 0.5 * dt : dt;
        add_scaled(acc, w, apply_semigroup(sys, (j - i) * dt, integrand[i], Direction::forward));
      }
      next.push_back(std::move(acc));
    }

    double gap = 0.0;
    for (int j = 0; j <= n; ++j) gap = std::max(gap, norm(sub(next[j], current[j])));
    current = std::move(next);
    result.picard_iterations = sweep;
    result.final_gap = gap;
    result.gap_history.push_back(gap);
    if (gap <= tol_picard) {
      result.trajectory = Trajectory{std::move(stamps), std::move(current)};
      return result;
    }
  }
  throw ConvergenceError("Picard iteration did not reach tolerance " +
                             std::to_string(tol_picard) + " within " +
                             std::to_string(max_picard) + " sweeps (last gap " +
                             std::to_string(result.final_gap) + ")",
                         result.final_gap, result.picard_iterations);
}

MildResult solve_mild(const SystemSpec& sys, const State& xi, const ControlSignal& u,
                      const Nonlinearity& f, double t_start, double t_end, int n_time_steps,
                      int max_picard, double tol_picard) {
  const Grid grid = grid_of(xi);
  return solve_mild(
      sys, xi, [&u, &grid](double t) { return u.evaluate(grid, t); }, f, t_start, t_end,
      n_time_steps, max_picard, tol_picard);
}

}  // namespace exsteer
