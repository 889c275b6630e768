#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "exsteer/steering.hpp"

namespace exsteer {

// Bounded, Lipschitz-in-state forcing term applied nodewise (per component
// for pair states). The bound M and Lipschitz constant are carried alongside
// the rule so the steering error estimates can use them.
class Nonlinearity {
 public:
  using Rule = std::function<double(double t, double state_value, double control_value)>;

  Nonlinearity(std::string name, double bound, double lipschitz, Rule rule);

  static Nonlinearity zero();
  static Nonlinearity sat_tanh(double gain);
  static Nonlinearity bounded_mix(double gain);
  // Registry lookup; throws RegistryError for unknown names.
  static Nonlinearity by_name(const std::string& name,
                              const std::map<std::string, double>& params);

  const std::string& name() const { return name_; }
  double bound() const { return bound_; }
  double lipschitz() const { return lipschitz_; }
  bool is_zero() const { return name_ == "zero"; }

  double operator()(double t, double x, double u) const { return rule_(t, x, u); }
  State evaluate(double t, const State& x, const State& u) const;

 private:
  std::string name_;
  double bound_;
  double lipschitz_;
  Rule rule_;
};

struct Trajectory {
  std::vector<double> stamps;
  std::vector<State> states;

  const State& terminal() const { return states.back(); }
};

struct MildResult {
  Trajectory trajectory;
  int picard_iterations = 0;
  double final_gap = 0.0;
  std::vector<double> gap_history;  // sup-norm gap after each iteration
};

inline constexpr int kDefaultMaxPicard = 50;
inline constexpr double kDefaultPicardTol = 1e-10;

// Fixed point of the variation-of-constants map
//   x(t) = S(t - t0) xi + int_{t0}^{t} S(t - s) (B u(s) + f(s, x(s), u(s))) ds
// discretized by trapezoid in s on n_time_steps uniform intervals, the
// evolution factors applied in closed form. Throws ConvergenceError when the
// sup-norm gap over the stamps has not reached tol within max_picard sweeps.
MildResult solve_mild(const SystemSpec& sys, const State& xi,
                      const std::function<State(double)>& control, const Nonlinearity& f,
                      double t_start, double t_end, int n_time_steps,
                      int max_picard = kDefaultMaxPicard,
                      double tol_picard = kDefaultPicardTol);

MildResult solve_mild(const SystemSpec& sys, const State& xi, const ControlSignal& u,
                      const Nonlinearity& f, double t_start, double t_end, int n_time_steps,
                      int max_picard = kDefaultMaxPicard,
                      double tol_picard = kDefaultPicardTol);

}  // namespace exsteer
