#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <excc/error.hpp>
#include <excc/serialization.hpp>

namespace excc::cli {

enum class Experiment { Lattice, Extremal, BallStudy, Rates, MinimaxXy, Random, ZeroStats, TriangleEnvelope };

std::string to_string(Experiment experiment);
Experiment experiment_from_string(const std::string& name);
bool is_stochastic(Experiment experiment);

/// Parsed experiment description. `raw` keeps experiment-specific fields
/// (estimator, p, alphas, function, ...) that are read by the runner.
struct ExperimentConfig {
  Experiment experiment = Experiment::Lattice;
  Json raw;
  std::vector<int> n_list;
  std::optional<std::uint64_t> seed;
  int samples = 1;
  std::filesystem::path output_dir = "out";
  std::filesystem::path base_dir;

  /// Canonical JSON form; parse(to_json(c)) reproduces c.
  Json to_json() const;
};

/// Thrown for malformed or inconsistent configs (exit code 2).
class ConfigError : public DomainError {
 public:
  using DomainError::DomainError;
};

ExperimentConfig parse_config(const Json& j, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// Checks every invariant and builds the typed objects once, so errors
/// surface before any artifact is written.
void validate(const ExperimentConfig& config);

/// Flag overrides from the command line.
void apply_overrides(ExperimentConfig& config, const std::optional<std::vector<int>>& n_list,
                     const std::optional<std::uint64_t>& seed, const std::optional<std::string>& out);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t value);

}  // namespace excc::cli
