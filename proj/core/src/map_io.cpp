#include "arclike/map_io.hpp"

#include <fstream>
#include <sstream>

#include "arclike/error.hpp"

namespace arclike {

using nlohmann::json;

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::exact: return "exact";
    case Provenance::transcribed_from_figure: return "transcribed-from-figure";
    case Provenance::constructed: return "constructed";
  }
  return "exact";
}

namespace {

Provenance provenance_from_string(const std::string& s) {
  if (s == "exact") return Provenance::exact;
  if (s == "transcribed-from-figure") return Provenance::transcribed_from_figure;
  if (s == "constructed") return Provenance::constructed;
  throw ParseError("unknown provenance '" + s + "'");
}

Interval interval_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError(std::string(what) + " must be a two-element array");
  }
  Interval out{rational_from_json(j[0]), rational_from_json(j[1])};
  if (out.hi < out.lo) throw ParseError(std::string(what) + " is empty");
  return out;
}

}  // namespace

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rationals must be strings like \"p/q\" or integers, got " + j.dump());
}

json map_to_json(const PLMap& f) {
  json bps = json::array();
  for (const auto& b : f.breakpoints()) bps.push_back({b.x.str(), b.y.str()});
  json out;
  out["domain"] = {f.domain().lo.str(), f.domain().hi.str()};
  out["codomain"] = {f.codomain().lo.str(), f.codomain().hi.str()};
  out["breakpoints"] = std::move(bps);
  return out;
}

PLMap map_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("a map must be a JSON object");
  if (!j.contains("breakpoints")) throw ParseError("map is missing \"breakpoints\"");
  const json& raw = j.at("breakpoints");
  if (!raw.is_array()) throw ParseError("\"breakpoints\" must be an array");
  std::vector<Breakpoint> pts;
  for (const auto& item : raw) {
    if (!item.is_array() || item.size() != 2) {
      throw ParseError("each breakpoint must be a pair [x, y]");
    }
    pts.push_back({rational_from_json(item[0]), rational_from_json(item[1])});
  }
  if (pts.size() < 2) throw ParseError("a map needs at least two breakpoints");
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].x == pts[i - 1].x) throw ParseError("duplicate abscissa " + pts[i].x.str());
    if (pts[i].x < pts[i - 1].x) throw ParseError("abscissae not sorted at " + pts[i].x.str());
  }
  if (j.contains("domain")) {
    const Interval dom = interval_from_json(j.at("domain"), "\"domain\"");
    if (dom.lo != pts.front().x || dom.hi != pts.back().x) {
      throw ParseError("\"domain\" disagrees with the first and last breakpoints");
    }
  } else {
    throw ParseError("map is missing \"domain\"");
  }
  const Interval cod = j.contains("codomain") ? interval_from_json(j.at("codomain"), "\"codomain\"")
                                              : unit_interval();
  try {
    return PLMap(std::move(pts), cod);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

json map_file_to_json(const MapFile& file) {
  json out;
  if (!file.name.empty()) out["name"] = file.name;
  out["provenance"] = to_string(file.provenance);
  if (!file.note.empty()) out["note"] = file.note;
  json body = map_to_json(file.map);
  for (auto& [k, v] : body.items()) out[k] = v;
  return out;
}

MapFile map_file_from_json(const json& j) {
  MapFile file{map_from_json(j), "", Provenance::exact, ""};
  if (j.contains("name")) file.name = j.at("name").get<std::string>();
  if (j.contains("provenance")) {
    file.provenance = provenance_from_string(j.at("provenance").get<std::string>());
  }
  if (j.contains("note")) file.note = j.at("note").get<std::string>();
  return file;
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

MapFile load_map_file(const std::filesystem::path& path) {
  try {
    MapFile file = map_file_from_json(load_json(path));
    if (file.name.empty()) file.name = path.stem().string();
    return file;
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_map_file(const std::filesystem::path& path, const MapFile& file) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << map_file_to_json(file).dump(2) << '\n';
}

}  // namespace arclike
