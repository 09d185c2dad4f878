#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace arclike::cli;
  CLI::App app{"Analysis, stitching and planar embedding of PL interval maps"};
  app.require_subcommand(1);

  AnalyzeOptions an;
  std::string an_json, an_svg;
  auto* analyze = app.add_subcommand("analyze", "departures, contour factor, radial profile, twins");
  analyze->add_option("--map", an.map, "map file")->required()->check(CLI::ExistingFile);
  analyze->add_option("--json", an_json, "write the report here instead of stdout");
  analyze->add_option("--svg", an_svg, "write graphs of f and its contour factor");

  StitchOptions st;
  std::string st_out;
  auto* stitch = app.add_subcommand("stitch", "stitched factor of f1, f2 checked against f3");
  stitch->add_option("--maps", st.maps, "three map files f1 f2 f3")
      ->required()
      ->expected(3)
      ->check(CLI::ExistingFile);
  stitch->add_option("--out", st_out, "write the report here instead of stdout");
  stitch->add_option("--variant", st.variant, "lemma | naive | swapped")
      ->check(CLI::IsMember({"lemma", "naive", "swapped"}));

  EmbedOptions em;
  std::string em_json, em_svg;
  auto* embed = app.add_subcommand("embed", "reindex a system and build an embedding chain");
  embed->add_option("--system", em.system, "system file")->required()->check(CLI::ExistingFile);
  embed->add_option("--stages", em.stages, "number of stages")->required();
  embed->add_option("--eps", em.eps, "first stage eps as p/q; later stages divide by 4")->required();
  embed->add_option("--json", em_json, "write the stage chain as JSON");
  embed->add_option("--svg", em_svg, "write the stage chain as SVG");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  if (analyze->parsed()) {
    if (!an_json.empty()) an.json_out = an_json;
    if (!an_svg.empty()) an.svg_out = an_svg;
    return cmd_analyze(an, std::cout, std::cerr);
  }
  if (stitch->parsed()) {
    if (!st_out.empty()) st.out = st_out;
    return cmd_stitch(st, std::cout, std::cerr);
  }
  if (!em_json.empty()) em.json_out = em_json;
  if (!em_svg.empty()) em.svg_out = em_svg;
  return cmd_embed(em, std::cout, std::cerr);
}
