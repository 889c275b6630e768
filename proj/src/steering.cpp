#include "exsteer/steering.hpp"

#include <cmath>

namespace exsteer {

void ControlSignal::append(ControlSegment seg) {
  if (!(seg.t_start < seg.t_end)) throw ParameterError("control segment must have t_start < t_end");
  if (!segments_.empty() && seg.t_start < segments_.back().t_end - 1e-12) {
    throw ParameterError("control segments must be ordered and non-overlapping");
  }
  segments_.push_back(std::move(seg));
}

State ControlSignal::evaluate_in_segment(const ControlSegment& seg, const Grid& grid,
                                         double t) const {
  require_same_grid(grid, seg.steering_vector.grid());
  State e = embed(seg.steering_vector);
  State shifted = apply_semigroup(sys_, seg.t_end - t, e, Direction::adjoint);
  return apply_gain(sys_, shifted);
}

State ControlSignal::evaluate(const Grid& grid, double t) const {
  for (std::size_t k = 0; k < segments_.size(); ++k) {
    const auto& seg = segments_[k];
    const bool owns = (k == 0) ? (t >= seg.t_start && t <= seg.t_end)
                               : (t > seg.t_start && t <= seg.t_end);
    if (owns) return evaluate_in_segment(seg, grid, t);
  }
  if (sys_.is_pair()) return PairFunction::zero(grid);
  return GridFunction::zero(grid);
}

ControlSegment make_steering_segment(const SystemSpec& sys, const State& from,
                                     const State& target, double t_start, double t_end,
                                     double eps) {
  if (!(t_start < t_end)) throw ParameterError("steering requires t_start < t_end");
  const double duration = t_end - t_start;
  State transported = apply_semigroup(sys, duration, sub(target, from), Direction::forward);
  RestrictedFunction alpha = restrict(transported, eps);
  RestrictedFunction q = apply_partial_gramian_inverse(sys, duration, eps, alpha);
  return ControlSegment{t_start, t_end, std::move(q)};
}

ControlSignal synthesize_linear_control(const SystemSpec& sys, const State& xi,
                                        const State& eta, double tau, double horizon_end,
                                        double eps) {
  if (!(tau >= 0.0) || !(tau < horizon_end)) {
    throw ParameterError("synthesize_linear_control: need 0 <= tau < horizon end");
  }
  ControlSignal u(sys);
  u.append(make_steering_segment(sys, xi, eta, tau, horizon_end, eps));
  return u;
}

double control_energy(const ControlSignal& u, const Grid& grid, int n_time_steps) {
  if (n_time_steps < 2) throw ParameterError("control_energy: n_time_steps must be >= 2");
  double total = 0.0;
  for (const auto& seg : u.segments()) {
    const double dt = (seg.t_end - seg.t_start) / n_time_steps;
    for (int j = 0; j <= n_time_steps; ++j) {
      const double w = (j == 0 || j == n_time_steps) ? 0.5 * dt : dt;
      const State value = u.evaluate_in_segment(seg, grid, seg.t_start + j * dt);
      total += w * inner_product(value, value);
    }
  }
  return total;
}

double partial_error(const State& terminal, const State& target, double eps) {
  return norm(sub(restrict(terminal, eps), restrict(target, eps)));
}

State simulate_linear(const SystemSpec& sys, const State& xi, const ControlSignal& u,
                      double t_start, double t_end, int n_time_steps) {
  if (!(t_start < t_end)) throw ParameterError("simulate_linear: need t_start < t_end");
  if (n_time_steps < 2) throw ParameterError("simulate_linear: n_time_steps must be >= 2");
  const Grid& grid = grid_of(xi);
  const double dt = (t_end - t_start) / n_time_steps;
  State terminal = apply_semigroup(sys, t_end - t_start, xi, Direction::forward);
  for (int j = 0; j <= n_time_steps; ++j) {
    const double s = t_start + j * dt;
    const double w = (j == 0 || j == n_time_steps) ? 0.5 * dt : dt;
    State forced = apply_gain(sys, u.evaluate(grid, s));
    add_scaled(terminal, w, apply_semigroup(sys, t_end - s, forced, Direction::forward));
  }
  return terminal;
}

}  // namespace exsteer
