#include "commands.hpp"

#include <fstream>
#include <ostream>

#include "arclike/embed.hpp"
#include "arclike/stitch.hpp"
#include "report.hpp"

namespace arclike::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "error (parse): " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

json file_meta(const MapFile& m) {
  json out{{"name", m.name}, {"provenance", to_string(m.provenance)}};
  if (!m.note.empty()) out["note"] = m.note;
  return out;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse:
      return kParse;
    case ErrorKind::domain:
    case ErrorKind::composition:
    case ErrorKind::hypothesis:
    case ErrorKind::precondition:
    case ErrorKind::inconsistent_center:
    case ErrorKind::boundary:
      return kPrecondition;
    case ErrorKind::construction:
    case ErrorKind::refine:
    case ErrorKind::internal_consistency:
      return kValidation;
  }
  return 1;
}

std::vector<MapFile> load_system(const fs::path& path) {
  const json j = load_json(path);
  const json* list = &j;
  if (j.is_object()) {
    if (!j.contains("maps")) throw ParseError(path.string() + ": system file needs a \"maps\" list");
    list = &j.at("maps");
  }
  if (!list->is_array() || list->empty()) {
    throw ParseError(path.string() + ": system map list must be a non-empty array");
  }
  std::vector<MapFile> out;
  for (const auto& entry : *list) {
    if (!entry.is_string()) throw ParseError(path.string() + ": map entries must be paths");
    fs::path p = entry.get<std::string>();
    if (p.is_relative()) p = path.parent_path() / p;
    MapFile m = load_map_file(p);
    if (m.name.empty()) m.name = p.stem().string();
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<PLMap> periodic(const std::vector<MapFile>& system, std::size_t count) {
  std::vector<PLMap> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(system[k % system.size()].map);
  return out;
}

std::vector<Rational> eps_schedule(const Rational& eps0, std::size_t stages) {
  std::vector<Rational> out;
  Rational e = eps0;
  for (std::size_t k = 0; k < stages; ++k) {
    out.push_back(e);
    e /= Rational(4);
  }
  return out;
}

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const MapFile m = load_map_file(opt.map);
    json report = file_meta(m);
    report.update(analyze_map(m.map));
    if (opt.svg_out) {
      std::vector<std::pair<std::string, PLMap>> graphs{{"map", m.map}};
      graphs.emplace_back("contour-factor", report["kind"] == "radial"
                                                ? radial_contour_factor(m.map)
                                                : contour_factor(m.map));
      write_text(*opt.svg_out, graphs_to_svg(graphs));
    }
    if (opt.json_out) {
      write_text(*opt.json_out, report.dump(2) + "\n");
    } else {
      out << report.dump(2) << '\n';
    }
    return int(kOk);
  });
}

int cmd_stitch(const StitchOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opt.maps.size() != 3) throw ParseError("stitch: exactly three map files are required");
    const StitchVariant variant = parse_stitch_variant(opt.variant);
    std::vector<MapFile> m;
    for (const auto& p : opt.maps) m.push_back(load_map_file(p));
    json report;
    report["maps"] = json::array();
    for (const auto& f : m) report["maps"].push_back(file_meta(f));
    report["stable_12"] = contour_stable(m[0].map, m[1].map);
    report["stable_23"] = contour_stable(m[1].map, m[2].map);
    report["twins"] = json::array();
    for (const auto& f : m) report["twins"].push_back(twins_to_json(no_contour_twins(f.map)));

    int code = kOk;
    try {
      const StitchResult r = stitched_factor(m[0].map, m[1].map, variant);
      const StitchVerdict v = verify_stitch(r, m[2].map);
      report["stitch"] = stitch_to_json(r, v);
      report["ok"] = r.recomposes && v.ok;
      if (!r.recomposes || !v.ok) code = kValidation;
    } catch (const PreconditionError& e) {
      report["ok"] = false;
      report["error"] = e.what();
      code = kPrecondition;
    }
    const std::string text = report.dump(2) + "\n";
    if (opt.out) {
      write_text(*opt.out, text);
    } else {
      out << text;
    }
    if (code == kPrecondition) err << "error (precondition): " << report["error"].get<std::string>() << '\n';
    return code;
  });
}

int cmd_embed(const EmbedOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opt.stages == 0) throw ParseError("embed: --stages must be at least 1");
    const Rational eps0 = Rational::parse(opt.eps);
    const std::vector<MapFile> system = load_system(opt.system);
    const std::size_t count = 2 * opt.stages + 1;
    const std::vector<PLMap> maps = periodic(system, count);

    SystemReindex re;
    try {
      re = reindex_system(maps);
    } catch (const PreconditionError& e) {
      std::string where;
      if (e.index()) {
        const std::size_t i = (*e.index() - 1) % system.size();
        where = " [system entry " + std::to_string(i + 1) + ": " + system[i].name + "]";
      }
      throw PreconditionError(std::string(e.what()) + where, e.index());
    }
    const std::vector<Rational> eps = eps_schedule(eps0, opt.stages);
    const std::vector<EmbeddingStage> chain = build_embedding(re.derived, opt.stages, eps);

    bool ok = true;
    json report;
    report["system"] = opt.system.filename().string();
    report["maps_used"] = count;
    report["stages"] = json::array();
    for (std::size_t k = 0; k < chain.size(); ++k) {
      const auto& s = chain[k];
      ok = ok && s.valid.all();
      report["stages"].push_back({{"index", k + 1},
                                  {"epsilon", s.epsilon.str()},
                                  {"vertices", s.polyline.size()},
                                  {"attempts", s.attempts},
                                  {"reflected", s.reflected},
                                  {"valid", flags_to_json(s.valid)}});
    }
    report["ok"] = ok;
    if (opt.json_out) write_text(*opt.json_out, chain_to_json(chain).dump() + "\n");
    if (opt.svg_out) write_text(*opt.svg_out, chain_to_svg(chain));
    out << report.dump(2) << '\n';
    if (!ok) err << "error (validation): at least one stage failed its checks\n";
    return ok ? int(kOk) : int(kValidation);
  });
}

}  // namespace arclike::cli
