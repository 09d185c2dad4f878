#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arclike/error.hpp"
#include "arclike/map_io.hpp"

namespace arclike::cli {

enum ExitCode : int {
  kOk = 0,
  kParse = 2,
  kPrecondition = 3,
  kValidation = 4,
};

int exit_code_for(ErrorKind kind);

struct AnalyzeOptions {
  std::filesystem::path map;
  std::optional<std::filesystem::path> json_out;
  std::optional<std::filesystem::path> svg_out;
};

struct StitchOptions {
  std::vector<std::filesystem::path> maps;  // exactly three
  std::optional<std::filesystem::path> out;
  std::string variant = "lemma";
};

struct EmbedOptions {
  std::filesystem::path system;
  std::size_t stages = 1;
  std::string eps = "1/20";
  std::optional<std::filesystem::path> json_out;
  std::optional<std::filesystem::path> svg_out;
};

// Each command writes its report to `out`, diagnostics to `err`, and
// returns the process exit code. Library errors are caught and mapped.
int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err);
int cmd_stitch(const StitchOptions& opt, std::ostream& out, std::ostream& err);
int cmd_embed(const EmbedOptions& opt, std::ostream& out, std::ostream& err);

// A system file is {"maps": [paths]} or a bare array of paths, resolved
// against the file's directory.
std::vector<MapFile> load_system(const std::filesystem::path& path);

// Extends a system periodically to `count` maps.
std::vector<PLMap> periodic(const std::vector<MapFile>& system, std::size_t count);

// eps_k = eps0 / 4^(k-1), k = 1..stages.
std::vector<Rational> eps_schedule(const Rational& eps0, std::size_t stages);

}  // namespace arclike::cli
