#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "arclike/contour.hpp"
#include "arclike/radial.hpp"
#include "arclike/stitch.hpp"

namespace arclike::cli {

nlohmann::json contour_point_to_json(const ContourPoint& c);
nlohmann::json departure_to_json(const RadialDeparture& d);

// `mirror` reports a left half in the original coordinate: blocks (lo, hi]
// of u = -x become [-hi, -lo).
nlohmann::json departures_to_json(const DepartureReport& r, bool mirror = false);

nlohmann::json profile_to_json(const RadialProfile& p);
nlohmann::json twins_to_json(const TwinsReport& t);

// Full analysis of one map: one-sided when the domain starts at 0, radial
// when it straddles 0.
nlohmann::json analyze_map(const PLMap& f);

nlohmann::json stitch_to_json(const StitchResult& r, const StitchVerdict& v);

// Graphs of the given maps over their domains, one group per map.
std::string graphs_to_svg(const std::vector<std::pair<std::string, PLMap>>& maps);

}  // namespace arclike::cli
