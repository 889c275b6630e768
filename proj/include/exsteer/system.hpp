#pragma once

#include <variant>

#include "exsteer/grid.hpp"

namespace exsteer {

// Single-stream exchanger: damping rate a > 0, control gain b != 0.
struct MonotubularParams {
  double a = 1.0;
  double b = 1.0;
};

// Two-stream exchanger: flow thermal capacities h1, h2 > 0 exchanging heat
// between the streams, per-stream control gains b1, b2 != 0.
struct TwoStreamParams {
  double h1 = 0.5;
  double h2 = 0.5;
  double b1 = 1.0;
  double b2 = 1.0;

  // The case with a closed-form Gramian.
  bool special_case() const { return h1 == 0.5 && h2 == 0.5 && b1 == 1.0 && b2 == 1.0; }
};

struct SystemSpec {
  std::variant<MonotubularParams, TwoStreamParams> exchanger;
  double horizon = 1.0;  // T
  double eps = 0.1;      // restriction half-margin, snapped to the grid in use

  bool is_pair() const { return std::holds_alternative<TwoStreamParams>(exchanger); }
  const MonotubularParams& mono() const;
  const TwoStreamParams& two_stream() const;

  // Throws ParameterError on any violated range.
  void validate() const;
};

SystemSpec make_monotubular(double a, double b, double horizon, double eps);
SystemSpec make_two_stream(double h1, double h2, double b1, double b2, double horizon,
                           double eps);

// Control input map B (and its adjoint, equal for these diagonal gains).
GridFunction apply_gain(const SystemSpec& sys, const GridFunction& u);
PairFunction apply_gain(const SystemSpec& sys, const PairFunction& u);
State apply_gain(const SystemSpec& sys, const State& u);

}  // namespace exsteer
