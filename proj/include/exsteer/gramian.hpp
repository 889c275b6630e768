#pragma once

#include <variant>

#include "exsteer/semigroup.hpp"

namespace exsteer {

// Symmetric 2x2 block of the two-stream Gramian at one node.
struct Sym2 {
  double d1 = 0.0, off = 0.0, d2 = 0.0;

  double eig_min() const;
  double eig_max() const;
  // Solves M q = rhs; throws SingularityError when not positive definite.
  void solve(double rhs1, double rhs2, double& q1, double& q2) const;
};

// Value of the Gramian at one node: a scalar weight for the monotubular
// system, a symmetric 2x2 block for the two-stream system.
struct GramianMultiplier {
  std::variant<double, Sym2> value;

  double scalar() const { return std::get<double>(value); }
  const Sym2& block() const { return std::get<Sym2>(value); }
};

// Time-s quadrature resolution used when no closed form is available
// (two-stream with general parameters).
inline constexpr int kGeneralMultiplierSteps = 512;

// Pointwise Gramian weight at position theta after control horizon t.
// Monotubular: b^2 (1 - e^{-2a min(t, theta)}) / (2a).
// Two-stream with h1 = h2 = 1/2, b1 = b2 = 1: (1/2) [[u, v], [v, u]] with
// u = 2m + 1 - e^{-2m}, v = 2m - 1 + e^{-2m}, m = min(t, theta).
// Two-stream general: trapezoid quadrature of the coupled integrand.
GramianMultiplier gramian_multiplier(const SystemSpec& sys, double t, double theta);

// Nodewise multiplication by the Gramian weight.
State apply_gramian(const SystemSpec& sys, double t, const State& x);

// Independent route: composite trapezoid in s of S(s) B B* S*(s) x built
// from the semigroup module only. Never uses the closed forms above.
State gramian_oracle(const SystemSpec& sys, double t, const State& x, int n_steps);

// Partial Gramian on the window [eps, 1-eps] and its pointwise inverse.
RestrictedFunction apply_partial_gramian(const SystemSpec& sys, double t, double eps,
                                         const RestrictedFunction& w);
RestrictedFunction apply_partial_gramian_inverse(const SystemSpec& sys, double t, double eps,
                                                 const RestrictedFunction& w);

struct CoercivityReport {
  double t = 0.0;
  double eps = 0.0;            // snapped; 0 means the full interval
  double c_min = 0.0;          // smallest multiplier eigenvalue on the window
  double inv_norm = 0.0;       // 1 / c_min
  double product = 0.0;        // t * inv_norm
  double condition_e_bound = 0.0;  // derived small-t cap for this system
  double reference_cap = 0.0;  // the small-t limiting constant (1/b^2, resp. 1)
  bool pass = false;           // product <= condition_e_bound + 1e-9
};

// eps = 0 evaluates the full interval (where the Gramian is not coercive).
CoercivityReport coercivity_report(const SystemSpec& sys, const Grid& grid, double t,
                                   double eps);

// Rayleigh quotient of Q(t) on the indicator of [0, delta] U [1-delta, 1]
// (both components for the two-stream system).
double noncoercivity_demo(const SystemSpec& sys, const Grid& grid, double t, double delta);

}  // namespace exsteer
