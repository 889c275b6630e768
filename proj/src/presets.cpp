#include "exsteer/presets.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace exsteer {

double bump_value(double theta, double center, double width) {
  const double r = 2.0 * (theta - center) / width;
  if (!(std::abs(r) < 1.0)) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - r * r));
}

namespace {

struct SampleTable {
  std::vector<double> theta;
  std::vector<double> value;
};

SampleTable load_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open samples file '" + path + "'");
  SampleTable table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double th, v;
    if (!(row >> th >> v)) {
      throw IoError("samples file '" + path + "': malformed line " + std::to_string(line_no));
    }
    table.theta.push_back(th);
    table.value.push_back(v);
  }
  if (table.theta.size() < 2) {
    throw IoError("samples file '" + path + "' needs at least two rows");
  }
  for (std::size_t i = 1; i < table.theta.size(); ++i) {
    if (!(table.theta[i] > table.theta[i - 1])) {
      throw IoError("samples file '" + path + "': theta column must increase");
    }
  }
  return table;
}

double interp_table(const SampleTable& t, double theta) {
  if (theta <= t.theta.front()) return t.value.front();
  if (theta >= t.theta.back()) return t.value.back();
  auto it = std::upper_bound(t.theta.begin(), t.theta.end(), theta);
  const std::size_t j = static_cast<std::size_t>(it - t.theta.begin());
  const double lam = (theta - t.theta[j - 1]) / (t.theta[j] - t.theta[j - 1]);
  return (1.0 - lam) * t.value[j - 1] + lam * t.value[j];
}

}  // namespace

double evaluate(const FunctionSpec& spec, double theta) {
  if (spec.kind == "zero") return 0.0;
  if (spec.kind == "const") return spec.c;
  if (spec.kind == "sine") return std::sin(spec.k * std::numbers::pi * theta);
  if (spec.kind == "bump") return bump_value(theta, spec.center, spec.width);
  if (spec.kind == "poly") {
    double acc = 0.0;
    for (auto it = spec.coeffs.rbegin(); it != spec.coeffs.rend(); ++it) {
      acc = acc * theta + *it;
    }
    return acc;
  }
  if (spec.kind == "samples") {
    // One-shot path; materialize() caches the table for grid sampling.
    return interp_table(load_samples(spec.path), theta);
  }
  throw RegistryError("unknown function preset '" + spec.kind + "'");
}

GridFunction materialize(const FunctionSpec& spec, const Grid& grid) {
  if (spec.kind == "samples") {
    const SampleTable table = load_samples(spec.path);
    return GridFunction::sample(grid,
                                [&table](double theta) { return interp_table(table, theta); });
  }
  return GridFunction::sample(grid, [&spec](double theta) { return evaluate(spec, theta); });
}

GridFunction random_sine_series(const Grid& grid, std::mt19937_64& rng, int max_mode,
                                double amplitude) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<double> c(max_mode);
  for (int k = 0; k < max_mode; ++k) c[k] = amplitude * coeff(rng) / (k + 1);
  return GridFunction::sample(grid, [&c](double theta) {
    double acc = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      acc += c[k] * std::sin((k + 1) * std::numbers::pi * theta);
    }
    return acc;
  });
}

}  // namespace exsteer
