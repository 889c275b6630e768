#include "exsteer/system.hpp"

#include <cmath>
#include <string>

namespace exsteer {

const MonotubularParams& SystemSpec::mono() const {
  if (is_pair()) throw TypeMismatchError("system is two-stream, not monotubular");
  return std::get<MonotubularParams>(exchanger);
}

const TwoStreamParams& SystemSpec::two_stream() const {
  if (!is_pair()) throw TypeMismatchError("system is monotubular, not two-stream");
  return std::get<TwoStreamParams>(exchanger);
}

void SystemSpec::validate() const {
  std::string bad;
  auto check = [&bad](bool ok, const char* msg) {
    if (!ok) {
      if (!bad.empty()) bad += "; ";
      bad += msg;
    }
  };
  if (is_pair()) {
    const auto& p = std::get<TwoStreamParams>(exchanger);
    check(p.h1 > 0 && std::isfinite(p.h1), "h1 must be > 0");
    check(p.h2 > 0 && std::isfinite(p.h2), "h2 must be > 0");
    check(p.b1 != 0 && std::isfinite(p.b1), "b1 must be nonzero");
    check(p.b2 != 0 && std::isfinite(p.b2), "b2 must be nonzero");
  } else {
    const auto& p = std::get<MonotubularParams>(exchanger);
    check(p.a > 0 && std::isfinite(p.a), "a must be > 0");
    check(p.b != 0 && std::isfinite(p.b), "b must be nonzero");
  }
  check(horizon > 0 && std::isfinite(horizon), "T must be > 0");
  check(eps > 0 && eps < 0.5, "eps must lie in (0, 1/2)");
  if (!bad.empty()) throw ParameterError("invalid system: " + bad);
}

SystemSpec make_monotubular(double a, double b, double horizon, double eps) {
  SystemSpec sys{MonotubularParams{a, b}, horizon, eps};
  sys.validate();
  return sys;
}

SystemSpec make_two_stream(double h1, double h2, double b1, double b2, double horizon,
                           double eps) {
  SystemSpec sys{TwoStreamParams{h1, h2, b1, b2}, horizon, eps};
  sys.validate();
  return sys;
}

GridFunction apply_gain(const SystemSpec& sys, const GridFunction& u) {
  return scale(u, sys.mono().b);
}

PairFunction apply_gain(const SystemSpec& sys, const PairFunction& u) {
  const auto& p = sys.two_stream();
  return PairFunction(scale(u.x1, p.b1), scale(u.x2, p.b2));
}

State apply_gain(const SystemSpec& sys, const State& u) {
  if (is_pair(u) != sys.is_pair()) throw TypeMismatchError("apply_gain: state kind mismatch");
  if (is_pair(u)) return apply_gain(sys, std::get<PairFunction>(u));
  return apply_gain(sys, std::get<GridFunction>(u));
}

}  // namespace exsteer
