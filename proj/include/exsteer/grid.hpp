#pragma once

#include <span>
#include <variant>
#include <vector>

#include "exsteer/errors.hpp"

namespace exsteer {

// Uniform grid on [0, 1] with trapezoid quadrature weights. Nodes are
// theta_i = i / n_cells; endpoint weights are half the interior weight and
// the weights sum to one.
struct Grid {
  int n_cells = 0;

  explicit Grid(int cells) : n_cells(cells) {
    if (cells < 1) throw ParameterError("Grid: n_cells must be >= 1");
  }

  int n_nodes() const { return n_cells + 1; }
  double spacing() const { return 1.0 / n_cells; }
  double node(int i) const { return static_cast<double>(i) / n_cells; }
  double weight(int i) const {
    return (i == 0 || i == n_cells) ? 0.5 * spacing() : spacing();
  }

  friend bool operator==(const Grid&, const Grid&) = default;
};

// Snaps eps to the nearest node and validates spacing <= eps <= 1/2 - spacing.
int snap_eps_index(const Grid& grid, double eps);
double snap_eps(const Grid& grid, double eps);

// Samples of an L2(0,1) function, one value per node. Values are finite by
// construction.
class GridFunction {
 public:
  GridFunction(Grid grid, std::vector<double> values);

  static GridFunction zero(const Grid& grid);
  template <class F>
  static GridFunction sample(const Grid& grid, const F& f) {
    std::vector<double> v(grid.n_nodes());
    for (int i = 0; i < grid.n_nodes(); ++i) v[i] = f(grid.node(i));
    return GridFunction(grid, std::move(v));
  }

  const Grid& grid() const { return grid_; }
  int size() const { return static_cast<int>(values_.size()); }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  double operator[](int i) const { return values_[i]; }
  double& operator[](int i) { return values_[i]; }

 private:
  Grid grid_;
  std::vector<double> values_;
};

// Two grid functions on one grid; the two-stream state.
struct PairFunction {
  GridFunction x1, x2;

  PairFunction(GridFunction a, GridFunction b);
  static PairFunction zero(const Grid& grid);
  const Grid& grid() const { return x1.grid(); }
};

using State = std::variant<GridFunction, PairFunction>;

const Grid& grid_of(const State& s);
bool is_pair(const State& s);
State zero_like(const State& s);

// Samples restricted to the window [eps, 1-eps]; one or two components.
class RestrictedFunction {
 public:
  RestrictedFunction(Grid grid, double eps, std::vector<std::vector<double>> comps);

  const Grid& grid() const { return grid_; }
  double eps() const { return grid_.node(lo_); }
  int first_node() const { return lo_; }
  int last_node() const { return grid_.n_cells - lo_; }
  int n_nodes() const { return last_node() - first_node() + 1; }
  int n_components() const { return static_cast<int>(comps_.size()); }
  std::span<const double> comp(int c) const { return comps_[c]; }
  std::span<double> comp(int c) { return comps_[c]; }

 private:
  Grid grid_;
  int lo_;
  std::vector<std::vector<double>> comps_;
};

// Trapezoid quadrature of the pointwise product; pairs add componentwise.
double inner_product(const GridFunction& x, const GridFunction& y);
double inner_product(const PairFunction& x, const PairFunction& y);
double inner_product(const State& x, const State& y);
double norm(const GridFunction& x);
double norm(const PairFunction& x);
double norm(const State& x);

// L2(eps, 1-eps) inner product (trapezoid on the window).
double inner_product(const RestrictedFunction& x, const RestrictedFunction& y);
double norm(const RestrictedFunction& x);

// Window operators: restriction, zero-extension embedding, and the induced
// projection (zero outside [eps, 1-eps]).
RestrictedFunction restrict(const GridFunction& x, double eps);
RestrictedFunction restrict(const PairFunction& x, double eps);
RestrictedFunction restrict(const State& x, double eps);
State embed(const RestrictedFunction& w);
GridFunction project(const GridFunction& x, double eps);
PairFunction project(const PairFunction& x, double eps);
State project(const State& x, double eps);

// Elementwise arithmetic helpers shared by the evolution and steering code.
GridFunction add(const GridFunction& x, const GridFunction& y);
GridFunction sub(const GridFunction& x, const GridFunction& y);
GridFunction scale(const GridFunction& x, double c);
PairFunction add(const PairFunction& x, const PairFunction& y);
PairFunction sub(const PairFunction& x, const PairFunction& y);
PairFunction scale(const PairFunction& x, double c);
State add(const State& x, const State& y);
State sub(const State& x, const State& y);
State scale(const State& x, double c);
// acc += c * x
void add_scaled(GridFunction& acc, double c, const GridFunction& x);
void add_scaled(PairFunction& acc, double c, const PairFunction& x);
void add_scaled(State& acc, double c, const State& x);

RestrictedFunction sub(const RestrictedFunction& x, const RestrictedFunction& y);
RestrictedFunction scale(const RestrictedFunction& x, double c);

void require_same_grid(const Grid& a, const Grid& b);

}  // namespace exsteer
