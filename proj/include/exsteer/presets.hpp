#pragma once

#include <random>
#include <string>
#include <vector>

#include "exsteer/grid.hpp"

namespace exsteer {

// Declarative description of an initial or target profile.
// Kinds: zero | const | sine | bump | poly | samples.
struct FunctionSpec {
  std::string kind = "zero";
  double c = 0.0;                 // const value
  int k = 1;                      // sine mode: sin(k pi theta)
  double center = 0.5;            // bump center
  double width = 0.5;             // bump support width
  std::vector<double> coeffs;     // poly coefficients, constant term first
  std::string path;               // samples: two-column CSV (theta, value)

  friend bool operator==(const FunctionSpec&, const FunctionSpec&) = default;
};

// Analytic evaluation (samples specs interpolate their table).
double evaluate(const FunctionSpec& spec, double theta);
GridFunction materialize(const FunctionSpec& spec, const Grid& grid);

// Smooth mollifier bump supported on [center - width/2, center + width/2]
// with unit peak.
double bump_value(double theta, double center, double width);

// Random sine series sum_k c_k sin(k pi theta); smooth, vanishing at both
// endpoints. Used by the randomized property checks.
GridFunction random_sine_series(const Grid& grid, std::mt19937_64& rng, int max_mode = 6,
                                double amplitude = 1.0);

}  // namespace exsteer
