#include "exsteer/gramian.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "exsteer/util.hpp"

namespace exsteer {

double Sym2::eig_min() const {
  const double mean = 0.5 * (d1 + d2);
  const double disc = std::sqrt(0.25 * (d1 - d2) * (d1 - d2) + off * off);
  return mean - disc;
}

double Sym2::eig_max() const {
  const double mean = 0.5 * (d1 + d2);
  const double disc = std::sqrt(0.25 * (d1 - d2) * (d1 - d2) + off * off);
  return mean + disc;
}

void Sym2::solve(double rhs1, double rhs2, double& q1, double& q2) const {
  const double det = d1 * d2 - off * off;
  if (!(det > 0.0) || !(d1 > 0.0)) {
    throw SingularityError("partial Gramian block is not positive definite");
  }
  q1 = (d2 * rhs1 - off * rhs2) / det;
  q2 = (d1 * rhs2 - off * rhs1) / det;
}

namespace {

void check_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw ParameterError("Gramian horizon t must be > 0");
}

double mono_weight(const MonotubularParams& p, double m) {
  return p.b * p.b * (1.0 - std::exp(-2.0 * p.a * m)) / (2.0 * p.a);
}

Sym2 special_block(double m) {
  const double decay = std::exp(-2.0 * m);
  const double u = 2.0 * m + 1.0 - decay;
  const double v = 2.0 * m - 1.0 + decay;
  return Sym2{0.5 * u, 0.5 * v, 0.5 * u};
}

// Integrand of the coupled Gramian: E(s) diag(b1^2, b2^2) E(s)^T.
Sym2 coupled_integrand(const TwoStreamParams& p, double s) {
  const CouplingMatrix e = coupling_exp(p.h1, p.h2, s);
  const double g1 = p.b1 * p.b1;
  const double g2 = p.b2 * p.b2;
  return Sym2{g1 * e.m11 * e.m11 + g2 * e.m12 * e.m12,
              g1 * e.m11 * e.m21 + g2 * e.m12 * e.m22,
              g1 * e.m21 * e.m21 + g2 * e.m22 * e.m22};
}

Sym2 general_block(const TwoStreamParams& p, double m, int n_steps) {
  const double ds = m / n_steps;
  double d1 = 0.0, off = 0.0, d2 = 0.0;
  for (int j = 0; j <= n_steps; ++j) {
    const double w = (j == 0 || j == n_steps) ? 0.5 * ds : ds;
    const Sym2 g = coupled_integrand(p, j * ds);
    d1 += w * g.d1;
    off += w * g.off;
    d2 += w * g.d2;
  }
  return Sym2{d1, off, d2};
}

GramianMultiplier multiplier_at(const SystemSpec& sys, double t, double theta) {
  const double m = std::min(t, theta);
  if (!sys.is_pair()) return GramianMultiplier{mono_weight(sys.mono(), m)};
  const auto& p = sys.two_stream();
  if (p.special_case()) return GramianMultiplier{special_block(m)};
  if (m == 0.0) return GramianMultiplier{Sym2{}};
  return GramianMultiplier{general_block(p, m, kGeneralMultiplierSteps)};
}

}  // namespace

GramianMultiplier gramian_multiplier(const SystemSpec& sys, double t, double theta) {
  check_time(t);
  if (theta < 0.0 || theta > 1.0) throw ParameterError("theta must lie in [0, 1]");
  return multiplier_at(sys, t, theta);
}

State apply_gramian(const SystemSpec& sys, double t, const State& x) {
  check_time(t);
  if (is_pair(x) != sys.is_pair()) {
    throw TypeMismatchError("apply_gramian: state kind does not match system variant");
  }
  const Grid& g = grid_of(x);
  if (!sys.is_pair()) {
    const auto& xs = std::get<GridFunction>(x);
    std::vector<double> out(g.n_nodes());
    for (int i = 0; i < g.n_nodes(); ++i) {
      out[i] = mono_weight(sys.mono(), std::min(t, g.node(i))) * xs[i];
    }
    return GridFunction(g, std::move(out));
  }
  const auto& xp = std::get<PairFunction>(x);
  std::vector<double> o1(g.n_nodes()), o2(g.n_nodes());
  for (int i = 0; i < g.n_nodes(); ++i) {
    const Sym2 m = multiplier_at(sys, t, g.node(i)).block();
    o1[i] = m.d1 * xp.x1[i] + m.off * xp.x2[i];
    o2[i] = m.off * xp.x1[i] + m.d2 * xp.x2[i];
  }
  return PairFunction(GridFunction(g, std::move(o1)), GridFunction(g, std::move(o2)));
}

State gramian_oracle(const SystemSpec& sys, double t, const State& x, int n_steps) {
  check_time(t);
  if (n_steps < 2) throw ParameterError("gramian_oracle: n_steps must be >= 2");
  if (is_pair(x) != sys.is_pair()) {
    throw TypeMismatchError("gramian_oracle: state kind does not match system variant");
  }
  const double ds = t / n_steps;
  State acc = zero_like(x);
  for (int j = 0; j <= n_steps; ++j) {
    const double s = j * ds;
    const double w = (j == 0 || j == n_steps) ? 0.5 * ds : ds;
    State term = apply_semigroup(sys, s, x, Direction::adjoint);
    term = apply_gain(sys, term);
    term = apply_gain(sys, term);
    term = apply_semigroup(sys, s, term, Direction::forward);
    add_scaled(acc, w, term);
  }
  return acc;
}

namespace {

// Nodewise multiplier blocks over the window, shared by the partial Gramian,
// its inverse, and the coercivity scan.
std::vector<GramianMultiplier> window_blocks(const SystemSpec& sys, double t, const Grid& g,
                                             int lo, int hi) {
  std::vector<GramianMultiplier> blocks;
  blocks.reserve(hi - lo + 1);
  for (int i = lo; i <= hi; ++i) blocks.push_back(multiplier_at(sys, t, g.node(i)));
  return blocks;
}

void check_window_kind(const SystemSpec& sys, const RestrictedFunction& w) {
  if ((w.n_components() == 2) != sys.is_pair()) {
    throw TypeMismatchError("restricted state kind does not match system variant");
  }
}

}  // namespace

RestrictedFunction apply_partial_gramian(const SystemSpec& sys, double t, double eps,
                                         const RestrictedFunction& w) {
  check_time(t);
  check_window_kind(sys, w);
  const Grid& g = w.grid();
  const int lo = snap_eps_index(g, eps);
  if (lo != w.first_node()) throw GridMismatchError("restricted window does not match eps");
  const auto blocks = window_blocks(sys, t, g, lo, w.last_node());
  std::vector<std::vector<double>> comps(w.n_components(),
                                         std::vector<double>(w.n_nodes()));
  if (!sys.is_pair()) {
    for (int i = 0; i < w.n_nodes(); ++i) comps[0][i] = blocks[i].scalar() * w.comp(0)[i];
  } else {
    for (int i = 0; i < w.n_nodes(); ++i) {
      const Sym2& m = blocks[i].block();
      comps[0][i] = m.d1 * w.comp(0)[i] + m.off * w.comp(1)[i];
      comps[1][i] = m.off * w.comp(0)[i] + m.d2 * w.comp(1)[i];
    }
  }
  return RestrictedFunction(g, w.eps(), std::move(comps));
}

RestrictedFunction apply_partial_gramian_inverse(const SystemSpec& sys, double t, double eps,
                                                 const RestrictedFunction& w) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw SingularityError("partial Gramian is singular for t <= 0");
  }
  check_window_kind(sys, w);
  const Grid& g = w.grid();
  const int lo = snap_eps_index(g, eps);
  if (lo != w.first_node()) throw GridMismatchError("restricted window does not match eps");
  const auto blocks = window_blocks(sys, t, g, lo, w.last_node());
  std::vector<std::vector<double>> comps(w.n_components(),
                                         std::vector<double>(w.n_nodes()));
  if (!sys.is_pair()) {
    for (int i = 0; i < w.n_nodes(); ++i) {
      const double m = blocks[i].scalar();
      if (!(m > 0.0)) throw SingularityError("partial Gramian weight vanishes on the window");
      comps[0][i] = w.comp(0)[i] / m;
    }
  } else {
    for (int i = 0; i < w.n_nodes(); ++i) {
      blocks[i].block().solve(w.comp(0)[i], w.comp(1)[i], comps[0][i], comps[1][i]);
    }
  }
  return RestrictedFunction(g, w.eps(), std::move(comps));
}

CoercivityReport coercivity_report(const SystemSpec& sys, const Grid& grid, double t,
                                   double eps) {
  check_time(t);
  CoercivityReport r;
  r.t = t;
  int lo = 0;
  int hi = grid.n_cells;
  if (eps != 0.0) {
    lo = snap_eps_index(grid, eps);
    hi = grid.n_cells - lo;
    r.eps = grid.node(lo);
  }

  // Left-to-right minimum over the window (deterministic reduction order).
  double c_min = std::numeric_limits<double>::infinity();
  for (int i = lo; i <= hi; ++i) {
    const GramianMultiplier m = multiplier_at(sys, t, grid.node(i));
    const double eig = sys.is_pair() ? m.block().eig_min() : m.scalar();
    if (eig < c_min) c_min = eig;
  }
  r.c_min = c_min;
  r.inv_norm = c_min > 0.0 ? 1.0 / c_min : std::numeric_limits<double>::infinity();
  r.product = t * r.inv_norm;

  if (!sys.is_pair()) {
    const auto& p = sys.mono();
    r.reference_cap = 1.0 / (p.b * p.b);
    r.condition_e_bound =
        r.eps > 0.0
            ? 2.0 * p.a * r.eps / (p.b * p.b * (1.0 - std::exp(-2.0 * p.a * r.eps)))
            : 0.0;
  } else {
    r.reference_cap = 1.0;
    r.condition_e_bound = r.eps > 0.0 ? r.eps / (1.0 - std::exp(-2.0 * r.eps)) : 0.0;
  }
  r.pass = c_min > 0.0 && r.product <= r.condition_e_bound + 1e-9;
  return r;
}

double noncoercivity_demo(const SystemSpec& sys, const Grid& grid, double t, double delta) {
  check_time(t);
  if (!(delta > 0.0 && delta < 0.5)) throw ParameterError("delta must lie in (0, 1/2)");
  auto indicator = GridFunction::sample(
      grid, [delta](double theta) { return (theta <= delta || theta >= 1.0 - delta) ? 1.0 : 0.0; });
  State x = sys.is_pair() ? State(PairFunction(indicator, indicator)) : State(indicator);
  const double denom = inner_product(x, x);
  return inner_product(apply_gramian(sys, t, x), x) / denom;
}

}  // namespace exsteer
