#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <excc/approx_rates.hpp>
#include <excc/random_ensembles.hpp>

#include "excc_cli/config.hpp"

namespace excc::cli {

struct Artifact {
  std::string file;
  std::size_t rows = 0;
  std::string checksum;  // FNV-1a of the file bytes
};

struct RunResult {
  std::filesystem::path output_dir;
  std::vector<Artifact> artifacts;
  /// Notes that a reader of the manifest must see (slack margins, skipped references).
  std::vector<std::string> flags;
  Json summary;
  double wall_seconds = 0.0;
};

/// Runs the experiment and writes its artifacts plus manifest.json.
RunResult run_experiment(const ExperimentConfig& config);

/// Writes plot_<artifact>.py scripts next to the CSVs; returns their paths.
std::vector<std::filesystem::path> emit_plots(const std::filesystem::path& dir);

TwoVarFunction function_from_json(const Json& j);
CoefficientLaw law_from_json(const Json& j);

/// Full command line: run / plots / validate. Returns the process exit code
/// (0 success, 2 invalid input, 3 numerical failure).
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNumerical = 3;

}  // namespace excc::cli
