#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "arclike/plmap.hpp"

namespace fixtures {

using arclike::PLMap;
using arclike::Rational;

inline Rational q(const char* s) { return Rational::parse(s); }

inline PLMap pl(std::initializer_list<std::pair<const char*, const char*>> pts,
                arclike::Interval cod = arclike::unit_interval()) {
  std::vector<arclike::Breakpoint> bps;
  for (const auto& [x, y] : pts) bps.push_back({q(x), q(y)});
  return PLMap(std::move(bps), cod);
}

inline PLMap tent() { return pl({{"0", "0"}, {"1/2", "1"}, {"1", "0"}}); }
inline PLMap f_A() { return pl({{"0", "0"}, {"1/4", "1/2"}, {"1/2", "-1/4"}, {"1", "3/4"}}); }
inline PLMap f_B() { return pl({{"-1", "1"}, {"0", "0"}, {"1/2", "1/4"}, {"1", "-1"}}); }
inline PLMap f_C() {
  return pl({{"-1", "0"}, {"-1/4", "1/2"}, {"0", "0"}, {"1/4", "1/2"}, {"1", "0"}});
}
inline PLMap f_D() {
  return pl({{"-1", "1/2"}, {"-1/2", "-1"}, {"0", "0"}, {"1/4", "1/2"}, {"1/2", "-1/4"}, {"1", "3/4"}});
}
inline PLMap f_E() {
  return pl({{"-1", "1"}, {"-1/4", "-1/2"}, {"0", "0"}, {"1/4", "1/2"}, {"1/2", "-1/2"}, {"1", "1"}});
}

// Stand-in for the Minc map on [-1, 1]: three folds per side, turning values
// +-1, +-2/3, every turning point sent to a turning point or an endpoint.
inline PLMap f_M() {
  return pl({{"-1", "-1"}, {"-2/3", "1"}, {"-1/3", "-2/3"}, {"0", "0"}, {"1/3", "2/3"},
             {"2/3", "-1"}, {"1", "1"}});
}

}  // namespace fixtures
