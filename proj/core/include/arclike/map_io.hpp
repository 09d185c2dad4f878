#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "arclike/plmap.hpp"

namespace arclike {

enum class Provenance { exact, transcribed_from_figure, constructed };

const char* to_string(Provenance p);

// A map as exchanged on disk:
//   {"domain": ["-1","1"], "breakpoints": [["x","y"], ...]}
// with optional "codomain", "name", "provenance" and "note" members.
struct MapFile {
  PLMap map;
  std::string name;
  Provenance provenance = Provenance::exact;
  std::string note;
};

nlohmann::json rational_to_json(const Rational& r);
// Accepts a "p/q" or integer string, or a JSON integer. Throws ParseError.
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json map_to_json(const PLMap& f);
// Throws ParseError on malformed input, unsorted or duplicate abscissae, or a
// domain that disagrees with the breakpoints.
PLMap map_from_json(const nlohmann::json& j);

nlohmann::json map_file_to_json(const MapFile& file);
MapFile map_file_from_json(const nlohmann::json& j);

MapFile load_map_file(const std::filesystem::path& path);
void save_map_file(const std::filesystem::path& path, const MapFile& file);

// Reads a whole file as JSON. Throws ParseError.
nlohmann::json load_json(const std::filesystem::path& path);

}  // namespace arclike
