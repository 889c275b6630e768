#include "exsteer/config.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "exsteer/util.hpp"

namespace exsteer {

std::optional<Command> command_from_string(const std::string& name) {
  if (name == "gramian-report") return Command::gramian_report;
  if (name == "check-conditions") return Command::check_conditions;
  if (name == "steer-linear") return Command::steer_linear;
  if (name == "steer-semilinear") return Command::steer_semilinear;
  if (name == "demo-noncoercivity") return Command::demo_noncoercivity;
  if (name == "selftest") return Command::selftest;
  return std::nullopt;
}

const char* to_string(Command c) {
  switch (c) {
    case Command::gramian_report: return "gramian-report";
    case Command::check_conditions: return "check-conditions";
    case Command::steer_linear: return "steer-linear";
    case Command::steer_semilinear: return "steer-semilinear";
    case Command::demo_noncoercivity: return "demo-noncoercivity";
    case Command::selftest: return "selftest";
  }
  return "unknown";
}

SystemSpec SystemSpec_from(const ScenarioConfig& cfg) {
  if (cfg.is_pair()) return make_two_stream(cfg.h1, cfg.h2, cfg.b1, cfg.b2, cfg.horizon, cfg.eps);
  return make_monotubular(cfg.a, cfg.b, cfg.horizon, cfg.eps);
}

SystemSpec ScenarioConfig::system() const { return SystemSpec_from(*this); }

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

struct Parser {
  std::map<std::string, std::string> entries;
  std::vector<std::string> errors;

  bool has(const std::string& key) const { return entries.count(key) > 0; }

  void fail(const std::string& msg) { errors.push_back(msg); }

  std::optional<double> number(const std::string& key) {
    auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    try {
      std::size_t used = 0;
      const double v = std::stod(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      fail(key + ": not a number ('" + it->second + "')");
      return std::nullopt;
    }
  }

  std::optional<int> integer(const std::string& key) {
    auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    try {
      std::size_t used = 0;
      const long v = std::stol(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("trailing characters");
      return static_cast<int>(v);
    } catch (const std::exception&) {
      fail(key + ": not an integer ('" + it->second + "')");
      return std::nullopt;
    }
  }

  std::optional<std::string> text(const std::string& key) {
    auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::vector<double>> number_list(const std::string& key) {
    auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    std::istringstream row(it->second);
    std::vector<double> out;
    double v;
    while (row >> v) out.push_back(v);
    if (!row.eof()) {
      fail(key + ": expected a space-separated list of numbers");
      return std::nullopt;
    }
    return out;
  }
};

const std::set<std::string>& known_scalar_keys() {
  static const std::set<std::string> keys = {
      "command",          "system.kind",        "system.a",
      "system.b",         "system.h1",          "system.h2",
      "system.b1",        "system.b2",          "system.T",
      "system.eps",       "grid.n_cells",       "nonlinearity.name",
      "numeric.n_time_steps", "numeric.n_stages", "numeric.stop_tol",
      "numeric.max_picard", "numeric.tol_picard", "numeric.tau",
      "demo.deltas",      "conditions.n_points", "conditions.t_min",
      "output.dir",
  };
  return keys;
}

bool known_function_key(const std::string& key) {
  static const std::set<std::string> blocks = {"initial", "initial2", "target", "target2"};
  static const std::set<std::string> fields = {"kind", "c", "k", "center", "width", "coeffs",
                                               "path"};
  const auto dot = key.find('.');
  if (dot == std::string::npos) return false;
  return blocks.count(key.substr(0, dot)) > 0 && fields.count(key.substr(dot + 1)) > 0;
}

void parse_function_block(Parser& p, const std::string& block, FunctionSpec& spec,
                          bool* present) {
  bool any = false;
  if (auto kind = p.text(block + ".kind")) {
    any = true;
    static const std::set<std::string> kinds = {"zero", "const", "sine",
                                                "bump", "poly",  "samples"};
    if (!kinds.count(*kind)) {
      p.fail(block + ".kind: unknown preset '" + *kind +
             "' (expected zero|const|sine|bump|poly|samples)");
    } else {
      spec.kind = *kind;
    }
  }
  if (auto v = p.number(block + ".c")) spec.c = *v, any = true;
  if (auto v = p.integer(block + ".k")) {
    any = true;
    if (*v < 1) p.fail(block + ".k: sine mode must be >= 1");
    spec.k = *v;
  }
  if (auto v = p.number(block + ".center")) spec.center = *v, any = true;
  if (auto v = p.number(block + ".width")) {
    any = true;
    if (!(*v > 0)) p.fail(block + ".width: must be > 0");
    spec.width = *v;
  }
  if (auto v = p.number_list(block + ".coeffs")) spec.coeffs = *v, any = true;
  if (auto v = p.text(block + ".path")) spec.path = *v, any = true;
  if (spec.kind == "samples" && spec.path.empty() && any) {
    p.fail(block + ".path: required for the samples preset");
  }
  if (present) *present = any;
}

}  // namespace

ParseResult parse_config(const std::string& document) {
  Parser p;
  std::istringstream in(document);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      p.fail("line " + std::to_string(line_no) + ": expected 'key = value'");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      p.fail("line " + std::to_string(line_no) + ": empty key or value");
      continue;
    }
    const bool known = known_scalar_keys().count(key) > 0 || known_function_key(key) ||
                       key.rfind("nonlinearity.", 0) == 0;
    if (!known) {
      p.fail("unknown key '" + key + "'");
      continue;
    }
    if (p.entries.count(key)) {
      p.fail("duplicate key '" + key + "'");
      continue;
    }
    p.entries[key] = value;
  }

  ScenarioConfig cfg;
  if (auto cmd = p.text("command")) {
    if (auto parsed = command_from_string(*cmd)) {
      cfg.command = *parsed;
    } else {
      p.fail("command: unknown command '" + *cmd + "'");
    }
  }

  if (auto kind = p.text("system.kind")) {
    if (*kind != "monotubular" && *kind != "two-stream") {
      p.fail("system.kind: expected monotubular|two-stream");
    } else {
      cfg.system_kind = *kind;
    }
  }

  const bool pair = cfg.system_kind == "two-stream";
  if (pair) {
    for (const char* key : {"system.h1", "system.h2", "system.b1", "system.b2"}) {
      if (!p.has(key)) p.fail(std::string("missing key '") + key + "' for two-stream system");
    }
    if (auto v = p.number("system.h1")) cfg.h1 = *v;
    if (auto v = p.number("system.h2")) cfg.h2 = *v;
    if (auto v = p.number("system.b1")) cfg.b1 = *v;
    if (auto v = p.number("system.b2")) cfg.b2 = *v;
    if (p.has("system.h1") && cfg.h1 <= 0) p.fail("system.h1: must be > 0");
    if (p.has("system.h2") && cfg.h2 <= 0) p.fail("system.h2: must be > 0");
    if (p.has("system.b1") && cfg.b1 == 0) p.fail("system.b1: must be nonzero");
    if (p.has("system.b2") && cfg.b2 == 0) p.fail("system.b2: must be nonzero");
  } else {
    for (const char* key : {"system.a", "system.b"}) {
      if (!p.has(key) && cfg.command != Command::selftest) {
        p.fail(std::string("missing key '") + key + "' for monotubular system");
      }
    }
    if (auto v = p.number("system.a")) cfg.a = *v;
    if (auto v = p.number("system.b")) cfg.b = *v;
    if (p.has("system.a") && cfg.a <= 0) p.fail("system.a: must be > 0");
    if (p.has("system.b") && cfg.b == 0) p.fail("system.b: must be nonzero");
  }

  if (auto v = p.number("system.T")) {
    if (!(*v > 0)) p.fail("system.T: must be > 0");
    cfg.horizon = *v;
  }
  if (auto v = p.number("system.eps")) {
    if (!(*v > 0 && *v < 0.5)) p.fail("system.eps: out of range (0, 0.5)");
    cfg.eps = *v;
  }
  if (auto v = p.integer("grid.n_cells")) {
    if (*v < 4) p.fail("grid.n_cells: admissible range is n_cells >= 4");
    cfg.n_cells = *v;
  }

  bool second_present = false;
  parse_function_block(p, "initial", cfg.initial[0], nullptr);
  parse_function_block(p, "initial2", cfg.initial[1], &second_present);
  if (!second_present) cfg.initial[1] = cfg.initial[0];
  second_present = false;
  parse_function_block(p, "target", cfg.target[0], nullptr);
  parse_function_block(p, "target2", cfg.target[1], &second_present);
  if (!second_present) cfg.target[1] = cfg.target[0];

  if (auto v = p.text("nonlinearity.name")) cfg.nonlinearity_name = *v;
  for (const auto& [key, value] : p.entries) {
    if (key.rfind("nonlinearity.", 0) == 0 && key != "nonlinearity.name") {
      if (auto v = p.number(key)) cfg.nonlinearity_params[key.substr(13)] = *v;
    }
  }

  if (auto v = p.integer("numeric.n_time_steps")) {
    if (*v < 2) p.fail("numeric.n_time_steps: must be >= 2");
    cfg.n_time_steps = *v;
  }
  if (auto v = p.integer("numeric.n_stages")) {
    if (*v < 1) p.fail("numeric.n_stages: must be >= 1");
    cfg.n_stages = *v;
  }
  if (auto v = p.number("numeric.stop_tol")) {
    if (!(*v > 0)) p.fail("numeric.stop_tol: must be > 0");
    cfg.stop_tol = *v;
  }
  if (auto v = p.integer("numeric.max_picard")) {
    if (*v < 1) p.fail("numeric.max_picard: must be >= 1");
    cfg.max_picard = *v;
  }
  if (auto v = p.number("numeric.tol_picard")) {
    if (!(*v > 0)) p.fail("numeric.tol_picard: must be > 0");
    cfg.tol_picard = *v;
  }
  if (auto v = p.number("numeric.tau")) {
    if (!(*v >= 0) || *v >= cfg.horizon) p.fail("numeric.tau: out of range [0, T)");
    cfg.tau = *v;
  }
  if (auto v = p.number_list("demo.deltas")) {
    if (v->empty()) p.fail("demo.deltas: list must not be empty");
    for (double d : *v) {
      if (!(d > 0 && d < 0.5)) p.fail("demo.deltas: each delta must lie in (0, 0.5)");
    }
    cfg.demo_deltas = *v;
  }
  if (auto v = p.integer("conditions.n_points")) {
    if (*v < 2) p.fail("conditions.n_points: must be >= 2");
    cfg.conditions_points = *v;
  }
  if (auto v = p.number("conditions.t_min")) {
    if (!(*v > 0) || *v > cfg.horizon) p.fail("conditions.t_min: out of range (0, T]");
    cfg.conditions_t_min = *v;
  }
  if (auto v = p.text("output.dir")) cfg.output_dir = *v;

  ParseResult result;
  result.errors = std::move(p.errors);
  if (result.errors.empty()) result.config = std::move(cfg);
  return result;
}

ParseResult parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    ParseResult r;
    r.errors.push_back("cannot open config file '" + path + "'");
    return r;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

namespace {

void write_function_block(std::ostringstream& out, const std::string& block,
                          const FunctionSpec& f) {
  out << block << ".kind = " << f.kind << "\n";
  out << block << ".c = " << util::format_g17(f.c) << "\n";
  out << block << ".k = " << f.k << "\n";
  out << block << ".center = " << util::format_g17(f.center) << "\n";
  out << block << ".width = " << util::format_g17(f.width) << "\n";
  if (!f.coeffs.empty()) {
    out << block << ".coeffs =";
    for (double c : f.coeffs) out << ' ' << util::format_g17(c);
    out << "\n";
  }
  if (!f.path.empty()) out << block << ".path = " << f.path << "\n";
}

}  // namespace

std::string serialize_config(const ScenarioConfig& cfg) {
  std::ostringstream out;
  out << "command = " << to_string(cfg.command) << "\n";
  out << "system.kind = " << cfg.system_kind << "\n";
  out << "system.a = " << util::format_g17(cfg.a) << "\n";
  out << "system.b = " << util::format_g17(cfg.b) << "\n";
  out << "system.h1 = " << util::format_g17(cfg.h1) << "\n";
  out << "system.h2 = " << util::format_g17(cfg.h2) << "\n";
  out << "system.b1 = " << util::format_g17(cfg.b1) << "\n";
  out << "system.b2 = " << util::format_g17(cfg.b2) << "\n";
  out << "system.T = " << util::format_g17(cfg.horizon) << "\n";
  out << "system.eps = " << util::format_g17(cfg.eps) << "\n";
  out << "grid.n_cells = " << cfg.n_cells << "\n";
  write_function_block(out, "initial", cfg.initial[0]);
  write_function_block(out, "initial2", cfg.initial[1]);
  write_function_block(out, "target", cfg.target[0]);
  write_function_block(out, "target2", cfg.target[1]);
  out << "nonlinearity.name = " << cfg.nonlinearity_name << "\n";
  for (const auto& [key, value] : cfg.nonlinearity_params) {
    out << "nonlinearity." << key << " = " << util::format_g17(value) << "\n";
  }
  out << "numeric.n_time_steps = " << cfg.n_time_steps << "\n";
  out << "numeric.n_stages = " << cfg.n_stages << "\n";
  out << "numeric.stop_tol = " << util::format_g17(cfg.stop_tol) << "\n";
  out << "numeric.max_picard = " << cfg.max_picard << "\n";
  out << "numeric.tol_picard = " << util::format_g17(cfg.tol_picard) << "\n";
  out << "numeric.tau = " << util::format_g17(cfg.tau) << "\n";
  out << "demo.deltas =";
  for (double d : cfg.demo_deltas) out << ' ' << util::format_g17(d);
  out << "\n";
  out << "conditions.n_points = " << cfg.conditions_points << "\n";
  out << "conditions.t_min = " << util::format_g17(cfg.conditions_t_min) << "\n";
  out << "output.dir = " << cfg.output_dir << "\n";
  return out.str();
}

}  // namespace exsteer
