#include "exsteer/semigroup.hpp"

#include <cmath>
#include <vector>

#include "exsteer/util.hpp"

namespace exsteer {

namespace {

void check_shift(double t) {
  if (t < 0 || !std::isfinite(t)) throw ParameterError("translation time must be >= 0");
}

// Evaluates the interpolant of x at cell coordinate c (= theta / spacing).
// c is guaranteed to lie in [0, n_cells] by the callers.
inline double eval_at_cell(std::span<const double> x, double c) {
  const int j = static_cast<int>(c);
  const double lam = c - j;
  if (lam == 0.0) return x[j];
  return (1.0 - lam) * x[j] + lam * x[j + 1];
}

}  // namespace

GridFunction translate_left(const GridFunction& x, double t) {
  check_shift(t);
  const Grid& g = x.grid();
  if (t >= 1.0) return GridFunction::zero(g);
  const double shift = t * g.n_cells;
  std::vector<double> out(g.n_nodes(), 0.0);
  auto src = x.values();
  util::parallel_for(g.n_nodes(), [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      const double c = static_cast<double>(i) - shift;
      if (c >= 0.0) out[i] = eval_at_cell(src, c);
    }
  });
  return GridFunction(g, std::move(out));
}

GridFunction translate_right(const GridFunction& x, double t) {
  check_shift(t);
  const Grid& g = x.grid();
  if (t >= 1.0) return GridFunction::zero(g);
  const double shift = t * g.n_cells;
  std::vector<double> out(g.n_nodes(), 0.0);
  auto src = x.values();
  util::parallel_for(g.n_nodes(), [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      const double c = static_cast<double>(i) + shift;
      if (c <= static_cast<double>(g.n_cells)) out[i] = eval_at_cell(src, c);
    }
  });
  return GridFunction(g, std::move(out));
}

CouplingMatrix coupling_exp(double h1, double h2, double t) {
  if (h1 <= 0 || h2 <= 0) throw ParameterError("coupling_exp: h1, h2 must be > 0");
  check_shift(t);
  const double sum = h1 + h2;
  const double decay = std::exp(-sum * t);
  return CouplingMatrix{(h2 + h1 * decay) / sum, h1 * (1.0 - decay) / sum,
                        h2 * (1.0 - decay) / sum, (h1 + h2 * decay) / sum};
}

PairFunction apply_coupling(const CouplingMatrix& m, const PairFunction& x) {
  const int n = x.x1.size();
  std::vector<double> out1(n), out2(n);
  auto a = x.x1.values();
  auto b = x.x2.values();
  for (int i = 0; i < n; ++i) {
    out1[i] = m.m11 * a[i] + m.m12 * b[i];
    out2[i] = m.m21 * a[i] + m.m22 * b[i];
  }
  return PairFunction(GridFunction(x.grid(), std::move(out1)),
                      GridFunction(x.grid(), std::move(out2)));
}

GridFunction apply_semigroup(const SystemSpec& sys, double t, const GridFunction& x,
                             Direction dir) {
  const auto& p = sys.mono();
  check_shift(t);
  if (t == 0.0) return x;
  GridFunction shifted =
      dir == Direction::forward ? translate_left(x, t) : translate_right(x, t);
  return scale(shifted, std::exp(-p.a * t));
}

PairFunction apply_semigroup(const SystemSpec& sys, double t, const PairFunction& x,
                             Direction dir) {
  const auto& p = sys.two_stream();
  check_shift(t);
  if (t == 0.0) return x;
  PairFunction shifted = dir == Direction::forward
                             ? PairFunction(translate_left(x.x1, t), translate_left(x.x2, t))
                             : PairFunction(translate_right(x.x1, t), translate_right(x.x2, t));
  CouplingMatrix m = coupling_exp(p.h1, p.h2, t);
  if (dir == Direction::adjoint) m = m.transpose();
  return apply_coupling(m, shifted);
}

State apply_semigroup(const SystemSpec& sys, double t, const State& x, Direction dir) {
  if (is_pair(x) != sys.is_pair()) {
    throw TypeMismatchError("apply_semigroup: state kind does not match system variant");
  }
  if (is_pair(x)) return apply_semigroup(sys, t, std::get<PairFunction>(x), dir);
  return apply_semigroup(sys, t, std::get<GridFunction>(x), dir);
}

}  // namespace exsteer
