#pragma once

#include <vector>

#include "exsteer/gramian.hpp"

namespace exsteer {

// One steering interval [t_start, t_end] carrying the vector
// q = Q_L^{-1}(t_end - t_start) restrict(S(t_end - t_start)(target - start)).
// The control it generates is u(t) = B* S*(t_end - t) embed(q).
struct ControlSegment {
  double t_start = 0.0;
  double t_end = 0.0;
  RestrictedFunction steering_vector;
};

// Ordered, non-overlapping steering segments. Evaluation outside every
// segment returns zero; at interior joins the earlier segment owns the point.
class ControlSignal {
 public:
  explicit ControlSignal(SystemSpec sys) : sys_(std::move(sys)) {}

  const SystemSpec& system() const { return sys_; }
  const std::vector<ControlSegment>& segments() const { return segments_; }
  void append(ControlSegment seg);

  // u(t, .) as a state on the grid.
  State evaluate(const Grid& grid, double t) const;
  // Same formula, pinned to one segment (used by segment-aligned quadrature).
  State evaluate_in_segment(const ControlSegment& seg, const Grid& grid, double t) const;

 private:
  SystemSpec sys_;
  std::vector<ControlSegment> segments_;
};

// Minimum-norm control steering the window image of the state from xi at
// time tau to the transported target at time horizon_end.
ControlSignal synthesize_linear_control(const SystemSpec& sys, const State& xi,
                                        const State& eta, double tau, double horizon_end,
                                        double eps);

// Builds the steering segment for [t_start, t_end]; shared by the linear
// synthesis and the staged semilinear loop.
ControlSegment make_steering_segment(const SystemSpec& sys, const State& from,
                                     const State& target, double t_start, double t_end,
                                     double eps);

// Trapezoid-in-time of the grid quadrature of |u(t,.)|^2, per segment.
double control_energy(const ControlSignal& u, const Grid& grid, int n_time_steps);

// L2 distance of the window restrictions.
double partial_error(const State& terminal, const State& target, double eps);

// Terminal state of the controlled linear system by direct trapezoid
// quadrature of the variation-of-constants integral. Independent of the
// Picard path in the mild solver.
State simulate_linear(const SystemSpec& sys, const State& xi, const ControlSignal& u,
                      double t_start, double t_end, int n_time_steps);

}  // namespace exsteer
