#pragma once

#include "exsteer/grid.hpp"
#include "exsteer/system.hpp"

namespace exsteer {

// Zero-inflow shift evolutions on [0, 1]. Off-grid shifts evaluate the
// piecewise-linear interpolant of the samples, with zero extension outside
// [0, 1]; both maps vanish identically for t >= 1.
//
// translate_left:  result(theta) = x(theta - t) for theta >= t, else 0.
// translate_right: result(theta) = x(theta + t) for theta + t <= 1, else 0.
GridFunction translate_left(const GridFunction& x, double t);
GridFunction translate_right(const GridFunction& x, double t);

// The 2x2 factor exp(A1 t) for the stream-coupling generator
// A1 = [[-h1, h1], [h2, -h2]]. Rows sum to one; entries lie in [0, 1].
struct CouplingMatrix {
  double m11 = 1.0, m12 = 0.0, m21 = 0.0, m22 = 1.0;
  CouplingMatrix transpose() const { return {m11, m21, m12, m22}; }
};

CouplingMatrix coupling_exp(double h1, double h2, double t);

// Nodewise application of a constant 2x2 mix to a pair state.
PairFunction apply_coupling(const CouplingMatrix& m, const PairFunction& x);

enum class Direction { forward, adjoint };

// Closed-form application of the system evolution:
//   monotubular  forward  e^{-at} . translate_left
//                adjoint  e^{-at} . translate_right
//   two-stream   forward  coupling_exp(h1,h2,t) . componentwise translate_left
//                adjoint  coupling_exp(h1,h2,t)^T . componentwise translate_right
// The translation and coupling factors commute.
GridFunction apply_semigroup(const SystemSpec& sys, double t, const GridFunction& x,
                             Direction dir);
PairFunction apply_semigroup(const SystemSpec& sys, double t, const PairFunction& x,
                             Direction dir);
State apply_semigroup(const SystemSpec& sys, double t, const State& x, Direction dir);

}  // namespace exsteer
