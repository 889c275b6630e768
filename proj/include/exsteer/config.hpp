#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exsteer/presets.hpp"
#include "exsteer/system.hpp"

namespace exsteer {

enum class Command {
  gramian_report,
  check_conditions,
  steer_linear,
  steer_semilinear,
  demo_noncoercivity,
  selftest,
};

std::optional<Command> command_from_string(const std::string& name);
const char* to_string(Command c);

// Scenario description parsed from the flat key-value document. Two-stream
// runs read the second components from initial2./target2.; when those blocks
// are absent the first-component preset is reused.
struct ScenarioConfig {
  Command command = Command::selftest;

  std::string system_kind = "monotubular";  // or "two-stream"
  double a = 1.0, b = 1.0;
  double h1 = 0.5, h2 = 0.5, b1 = 1.0, b2 = 1.0;
  double horizon = 1.0;
  double eps = 0.1;

  int n_cells = 1024;

  std::array<FunctionSpec, 2> initial{};  // second entry used for two-stream
  std::array<FunctionSpec, 2> target{};

  std::string nonlinearity_name = "zero";
  std::map<std::string, double> nonlinearity_params;

  int n_time_steps = 256;
  int n_stages = 12;
  double stop_tol = 1e-3;
  int max_picard = 50;
  double tol_picard = 1e-10;
  double tau = 0.0;  // steer-linear start time

  std::vector<double> demo_deltas{0.1, 0.05, 0.025, 0.0125};
  int conditions_points = 50;
  double conditions_t_min = 1e-3;

  std::string output_dir = "out";

  SystemSpec system() const;
  bool is_pair() const { return system_kind == "two-stream"; }

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

struct ParseResult {
  std::optional<ScenarioConfig> config;  // set iff errors is empty
  std::vector<std::string> errors;       // every violation, not just the first
};

// Parses `key = value` lines ('#' comments, blank lines ignored). Unknown
// keys and out-of-range values are all reported.
ParseResult parse_config(const std::string& document);
ParseResult parse_config_file(const std::string& path);

// Canonical serialization; parse_config(serialize_config(c)) reproduces c.
std::string serialize_config(const ScenarioConfig& cfg);

}  // namespace exsteer
