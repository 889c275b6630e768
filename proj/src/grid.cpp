#include "exsteer/grid.hpp"

#include <cmath>
#include <string>

#include "exsteer/util.hpp"

namespace exsteer {

namespace {

void require_finite(std::span<const double> v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw ParameterError(std::string(what) + ": non-finite sample");
  }
}

}  // namespace

int snap_eps_index(const Grid& grid, double eps) {
  const int k = static_cast<int>(std::llround(eps * grid.n_cells));
  if (k < 1 || 2 * k > grid.n_cells - 2) {
    throw ParameterError("eps = " + std::to_string(eps) +
                         " outside admissible range [spacing, 1/2 - spacing] after snapping");
  }
  return k;
}

double snap_eps(const Grid& grid, double eps) { return grid.node(snap_eps_index(grid, eps)); }

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != grid_.n_nodes()) {
    throw ParameterError("GridFunction: sample count does not match node count");
  }
  require_finite(values_, "GridFunction");
}

GridFunction GridFunction::zero(const Grid& grid) {
  return GridFunction(grid, std::vector<double>(grid.n_nodes(), 0.0));
}

PairFunction::PairFunction(GridFunction a, GridFunction b) : x1(std::move(a)), x2(std::move(b)) {
  if (!(x1.grid() == x2.grid())) throw GridMismatchError("PairFunction: components on different grids");
}

PairFunction PairFunction::zero(const Grid& grid) {
  return PairFunction(GridFunction::zero(grid), GridFunction::zero(grid));
}

const Grid& grid_of(const State& s) {
  return std::visit([](const auto& v) -> const Grid& { return v.grid(); }, s);
}

bool is_pair(const State& s) { return std::holds_alternative<PairFunction>(s); }

State zero_like(const State& s) {
  if (is_pair(s)) return PairFunction::zero(grid_of(s));
  return GridFunction::zero(grid_of(s));
}

RestrictedFunction::RestrictedFunction(Grid grid, double eps,
                                       std::vector<std::vector<double>> comps)
    : grid_(grid), lo_(snap_eps_index(grid, eps)), comps_(std::move(comps)) {
  if (comps_.empty() || comps_.size() > 2) {
    throw ParameterError("RestrictedFunction: expected one or two components");
  }
  const int expected = grid_.n_cells - 2 * lo_ + 1;
  for (const auto& c : comps_) {
    if (static_cast<int>(c.size()) != expected) {
      throw ParameterError("RestrictedFunction: sample count does not match window");
    }
    require_finite(c, "RestrictedFunction");
  }
}

void require_same_grid(const Grid& a, const Grid& b) {
  if (!(a == b)) throw GridMismatchError("operands live on different grids");
}

double inner_product(const GridFunction& x, const GridFunction& y) {
  require_same_grid(x.grid(), y.grid());
  const Grid& g = x.grid();
  return util::pairwise_reduce(0, g.n_nodes(),
                               [&](int i) { return g.weight(i) * x[i] * y[i]; });
}

double inner_product(const PairFunction& x, const PairFunction& y) {
  return inner_product(x.x1, y.x1) + inner_product(x.x2, y.x2);
}

double inner_product(const State& x, const State& y) {
  if (is_pair(x) != is_pair(y)) throw TypeMismatchError("inner_product: mixed state kinds");
  if (is_pair(x)) return inner_product(std::get<PairFunction>(x), std::get<PairFunction>(y));
  return inner_product(std::get<GridFunction>(x), std::get<GridFunction>(y));
}

double norm(const GridFunction& x) { return std::sqrt(inner_product(x, x)); }
double norm(const PairFunction& x) { return std::sqrt(inner_product(x, x)); }
double norm(const State& x) { return std::sqrt(inner_product(x, x)); }

double inner_product(const RestrictedFunction& x, const RestrictedFunction& y) {
  require_same_grid(x.grid(), y.grid());
  if (x.first_node() != y.first_node() || x.n_components() != y.n_components()) {
    throw GridMismatchError("restricted operands have different windows or kinds");
  }
  const double dtheta = x.grid().spacing();
  const int n = x.n_nodes();
  double total = 0.0;
  for (int c = 0; c < x.n_components(); ++c) {
    auto xv = x.comp(c);
    auto yv = y.comp(c);
    total += util::pairwise_reduce(0, n, [&](int i) {
      const double w = (i == 0 || i == n - 1) ? 0.5 * dtheta : dtheta;
      return w * xv[i] * yv[i];
    });
  }
  return total;
}

double norm(const RestrictedFunction& x) { return std::sqrt(inner_product(x, x)); }

namespace {

std::vector<double> window_slice(const GridFunction& x, int lo, int hi) {
  std::vector<double> v(hi - lo + 1);
  for (int i = lo; i <= hi; ++i) v[i - lo] = x[i];
  return v;
}

}  // namespace

RestrictedFunction restrict(const GridFunction& x, double eps) {
  const int k = snap_eps_index(x.grid(), eps);
  return RestrictedFunction(x.grid(), x.grid().node(k),
                            {window_slice(x, k, x.grid().n_cells - k)});
}

RestrictedFunction restrict(const PairFunction& x, double eps) {
  const int k = snap_eps_index(x.grid(), eps);
  const int hi = x.grid().n_cells - k;
  return RestrictedFunction(x.grid(), x.grid().node(k),
                            {window_slice(x.x1, k, hi), window_slice(x.x2, k, hi)});
}

RestrictedFunction restrict(const State& x, double eps) {
  if (is_pair(x)) return restrict(std::get<PairFunction>(x), eps);
  return restrict(std::get<GridFunction>(x), eps);
}

namespace {

GridFunction embed_component(const Grid& g, int lo, std::span<const double> vals) {
  std::vector<double> out(g.n_nodes(), 0.0);
  for (int i = 0; i < static_cast<int>(vals.size()); ++i) out[lo + i] = vals[i];
  return GridFunction(g, std::move(out));
}

}  // namespace

State embed(const RestrictedFunction& w) {
  if (w.n_components() == 1) return embed_component(w.grid(), w.first_node(), w.comp(0));
  return PairFunction(embed_component(w.grid(), w.first_node(), w.comp(0)),
                      embed_component(w.grid(), w.first_node(), w.comp(1)));
}

GridFunction project(const GridFunction& x, double eps) {
  const int k = snap_eps_index(x.grid(), eps);
  std::vector<double> out(x.grid().n_nodes(), 0.0);
  for (int i = k; i <= x.grid().n_cells - k; ++i) out[i] = x[i];
  return GridFunction(x.grid(), std::move(out));
}

PairFunction project(const PairFunction& x, double eps) {
  return PairFunction(project(x.x1, eps), project(x.x2, eps));
}

State project(const State& x, double eps) {
  if (is_pair(x)) return project(std::get<PairFunction>(x), eps);
  return project(std::get<GridFunction>(x), eps);
}

namespace {

template <class Op>
GridFunction zip(const GridFunction& x, const GridFunction& y, const Op& op) {
  require_same_grid(x.grid(), y.grid());
  std::vector<double> out(x.size());
  for (int i = 0; i < x.size(); ++i) out[i] = op(x[i], y[i]);
  return GridFunction(x.grid(), std::move(out));
}

}  // namespace

GridFunction add(const GridFunction& x, const GridFunction& y) {
  return zip(x, y, [](double a, double b) { return a + b; });
}
GridFunction sub(const GridFunction& x, const GridFunction& y) {
  return zip(x, y, [](double a, double b) { return a - b; });
}
GridFunction scale(const GridFunction& x, double c) {
  std::vector<double> out(x.size());
  for (int i = 0; i < x.size(); ++i) out[i] = c * x[i];
  return GridFunction(x.grid(), std::move(out));
}

PairFunction add(const PairFunction& x, const PairFunction& y) {
  return PairFunction(add(x.x1, y.x1), add(x.x2, y.x2));
}
PairFunction sub(const PairFunction& x, const PairFunction& y) {
  return PairFunction(sub(x.x1, y.x1), sub(x.x2, y.x2));
}
PairFunction scale(const PairFunction& x, double c) {
  return PairFunction(scale(x.x1, c), scale(x.x2, c));
}

State add(const State& x, const State& y) {
  if (is_pair(x) != is_pair(y)) throw TypeMismatchError("add: mixed state kinds");
  if (is_pair(x)) return add(std::get<PairFunction>(x), std::get<PairFunction>(y));
  return add(std::get<GridFunction>(x), std::get<GridFunction>(y));
}
State sub(const State& x, const State& y) {
  if (is_pair(x) != is_pair(y)) throw TypeMismatchError("sub: mixed state kinds");
  if (is_pair(x)) return sub(std::get<PairFunction>(x), std::get<PairFunction>(y));
  return sub(std::get<GridFunction>(x), std::get<GridFunction>(y));
}
State scale(const State& x, double c) {
  if (is_pair(x)) return scale(std::get<PairFunction>(x), c);
  return scale(std::get<GridFunction>(x), c);
}

void add_scaled(GridFunction& acc, double c, const GridFunction& x) {
  require_same_grid(acc.grid(), x.grid());
  auto a = acc.values();
  auto v = x.values();
  for (int i = 0; i < acc.size(); ++i) a[i] += c * v[i];
}

void add_scaled(PairFunction& acc, double c, const PairFunction& x) {
  add_scaled(acc.x1, c, x.x1);
  add_scaled(acc.x2, c, x.x2);
}

void add_scaled(State& acc, double c, const State& x) {
  if (is_pair(acc) != is_pair(x)) throw TypeMismatchError("add_scaled: mixed state kinds");
  if (is_pair(acc)) {
    add_scaled(std::get<PairFunction>(acc), c, std::get<PairFunction>(x));
  } else {
    add_scaled(std::get<GridFunction>(acc), c, std::get<GridFunction>(x));
  }
}

RestrictedFunction sub(const RestrictedFunction& x, const RestrictedFunction& y) {
  require_same_grid(x.grid(), y.grid());
  if (x.first_node() != y.first_node() || x.n_components() != y.n_components()) {
    throw GridMismatchError("restricted operands have different windows or kinds");
  }
  std::vector<std::vector<double>> comps(x.n_components());
  for (int c = 0; c < x.n_components(); ++c) {
    comps[c].resize(x.n_nodes());
    for (int i = 0; i < x.n_nodes(); ++i) comps[c][i] = x.comp(c)[i] - y.comp(c)[i];
  }
  return RestrictedFunction(x.grid(), x.eps(), std::move(comps));
}

RestrictedFunction scale(const RestrictedFunction& x, double c) {
  std::vector<std::vector<double>> comps(x.n_components());
  for (int k = 0; k < x.n_components(); ++k) {
    comps[k].resize(x.n_nodes());
    for (int i = 0; i < x.n_nodes(); ++i) comps[k][i] = c * x.comp(k)[i];
  }
  return RestrictedFunction(x.grid(), x.eps(), std::move(comps));
}

}  // namespace exsteer
