#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "arclike/error.hpp"
#include "arclike/map_io.hpp"

namespace arclike::cli {

using nlohmann::json;

namespace {

json range_to_json(const ValueRange& r) {
  return {{"lo", r.lo.str()}, {"hi", r.hi.str()}, {"lo_open", r.lo_open}, {"hi_open", r.hi_open}};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

json contour_point_to_json(const ContourPoint& c) {
  return {{"x", c.x.str()}, {"value", c.value.str()}, {"orientation", to_string(c.orientation)}};
}

json departure_to_json(const RadialDeparture& d) {
  return {{"x1", d.x1.str()},
          {"x2", d.x2.str()},
          {"y1", d.y1.str()},
          {"y2", d.y2.str()},
          {"orientation", to_string(d.orientation)}};
}

json departures_to_json(const DepartureReport& r, bool mirror) {
  json blocks = json::array();
  for (const auto& b : r.blocks) {
    json iv = json::array();
    for (const auto& i : b.intervals) {
      if (mirror) {
        iv.push_back({(-i.hi).str(), (-i.lo).str()});
      } else {
        iv.push_back({i.lo.str(), i.hi.str()});
      }
    }
    blocks.push_back({{"orientation", to_string(b.orientation)},
                      {"intervals", std::move(iv)},
                      {"record_before", b.record_before.str()},
                      {"record", b.record.str()}});
  }
  json points = json::array();
  for (auto c : r.contour_points) {
    if (mirror) c.x = -c.x;
    points.push_back(contour_point_to_json(c));
  }
  return {{"blocks", std::move(blocks)}, {"contour_points", std::move(points)}};
}

json profile_to_json(const RadialProfile& p) {
  json regions = json::array();
  for (const auto& r : p.regions) {
    regions.push_back({{"orientation", to_string(r.orientation)},
                       {"y1", range_to_json(r.y1)},
                       {"y2", range_to_json(r.y2)},
                       {"left_block", r.left_block},
                       {"right_block", r.right_block},
                       {"corner", departure_to_json(r.corner)}});
  }
  return {{"has_positive", p.has_positive},
          {"has_negative", p.has_negative},
          {"regions", std::move(regions)}};
}

json twins_to_json(const TwinsReport& t) {
  json out{{"ok", t.ok}, {"zero_extremal", t.zero_extremal}};
  if (t.twins) {
    out["twins"] = {{"right", t.twins->first.str()}, {"left", t.twins->second.str()}};
  } else {
    out["twins"] = nullptr;
  }
  return out;
}

json analyze_map(const PLMap& f) {
  const Interval& d = f.domain();
  json out;
  out["map"] = map_to_json(f);
  if (d.lo.is_zero()) {
    out["kind"] = "one-sided";
    out["departures"] = departures_to_json(departures(f));
    out["contour_factor"] = map_to_json(contour_factor(f));
    out["meandering_factor"] = map_to_json(meandering_factor(f));
    return out;
  }
  if (d.lo.sign() >= 0 || d.hi.sign() <= 0) {
    throw HypothesisError("analyze: the domain must start at 0 or contain 0 in its interior");
  }
  require_standing_hypothesis(f, "analyze");
  out["kind"] = "radial";
  out["departures"] = {{"right", departures_to_json(departures(right_half(f)))},
                       {"left", departures_to_json(departures(left_half(f)), true)}};
  const PLMap t = radial_contour_factor(f);
  out["contour_factor"] = map_to_json(t);
  out["meandering_factor"] = map_to_json(radial_meandering_factor(f));
  out["radial_profile"] = profile_to_json(radial_profile(f));
  out["twins"] = twins_to_json(no_contour_twins(f));
  return out;
}

json stitch_to_json(const StitchResult& r, const StitchVerdict& v) {
  json negatives = json::array();
  for (const auto& d : v.negatives) negatives.push_back(departure_to_json(d));
  return {{"variant", to_string(r.variant)},
          {"t1", map_to_json(r.t1)},
          {"s1", map_to_json(r.s1)},
          {"s12", map_to_json(r.s12)},
          {"s_tilde", map_to_json(r.s_tilde)},
          {"recomposes", r.recomposes},
          {"verify",
           {{"ok", v.ok},
            {"witness", v.witness ? departure_to_json(*v.witness) : json(nullptr)},
            {"negative_corners", std::move(negatives)}}}};
}

std::string graphs_to_svg(const std::vector<std::pair<std::string, PLMap>>& maps) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};
  double lo = 0, hi = 1;
  for (const auto& [name, f] : maps) {
    lo = std::min(lo, f.domain().lo.to_double());
    hi = std::max(hi, f.domain().hi.to_double());
  }
  const double w = hi - lo, pad = 0.05 * w;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\""
      << static_cast<int>(std::lround(600 * (2 + 2 * pad) / (w + 2 * pad))) << "\" viewBox=\""
      << num(lo - pad) << ' ' << num(-1 - pad) << ' ' << num(w + 2 * pad) << ' '
      << num(2 + 2 * pad) << "\">\n";
  const double stroke = w / 400;
  out << "  <g id=\"axes\" fill=\"none\" stroke=\"#999999\" stroke-width=\"" << num(stroke / 2)
      << "\">\n    <path d=\"M" << num(lo) << ",-1 L" << num(hi) << ",-1 L" << num(hi) << ",1 L"
      << num(lo) << ",1 Z\"/>\n    <path d=\"M" << num(lo) << ",0 L" << num(hi)
      << ",0\"/>\n  </g>\n";
  for (std::size_t k = 0; k < maps.size(); ++k) {
    out << "  <g id=\"" << maps[k].first << "\" fill=\"none\" stroke=\"" << colors[k % 8]
        << "\" stroke-width=\"" << num(stroke) << "\">\n    <path d=\"";
    const auto bps = maps[k].second.breakpoints();
    for (std::size_t i = 0; i < bps.size(); ++i) {
      out << (i == 0 ? "M" : " L") << num(bps[i].x.to_double()) << ','
          << num(-bps[i].y.to_double());
    }
    out << "\"/>\n  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace arclike::cli
