#include "excc_cli/config.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <utility>

namespace excc::cli {
namespace {

constexpr std::array<std::pair<Experiment, const char*>, 8> kNames{{
    {Experiment::Lattice, "lattice"},
    {Experiment::Extremal, "extremal"},
    {Experiment::BallStudy, "ball-study"},
    {Experiment::Rates, "rates"},
    {Experiment::MinimaxXy, "minimax-xy"},
    {Experiment::Random, "random"},
    {Experiment::ZeroStats, "zero-stats"},
    {Experiment::TriangleEnvelope, "triangle-envelope"},
}};

}  // namespace

std::string to_string(Experiment experiment) {
  for (const auto& [e, name] : kNames)
    if (e == experiment) return name;
  return "unknown";
}

Experiment experiment_from_string(const std::string& name) {
  for (const auto& [e, n] : kNames)
    if (name == n) return e;
  throw ConfigError("unknown experiment '" + name + "'");
}

bool is_stochastic(Experiment experiment) {
  return experiment == Experiment::Random || experiment == Experiment::ZeroStats;
}

Json ExperimentConfig::to_json() const {
  Json out = raw;
  out["experiment"] = cli::to_string(experiment);
  out["n"] = n_list;
  if (seed) {
    out["seed"] = *seed;
  } else {
    out.erase("seed");
  }
  out["samples"] = samples;
  out["output"] = output_dir.string();
  return out;
}

ExperimentConfig parse_config(const Json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  if (!j.contains("experiment") || !j.at("experiment").is_string())
    throw ConfigError("config needs a string field \"experiment\"");
  ExperimentConfig config;
  config.raw = j;
  config.base_dir = base_dir;
  config.experiment = experiment_from_string(j.at("experiment").get<std::string>());
  try {
    if (j.contains("n")) {
      const auto& n = j.at("n");
      if (n.is_array()) {
        config.n_list = n.get<std::vector<int>>();
      } else {
        config.n_list = {n.get<int>()};
      }
    }
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("samples")) config.samples = j.at("samples").get<int>();
    if (j.contains("output")) config.output_dir = j.at("output").get<std::string>();
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("bad scalar field: ") + e.what());
  }
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("config is not valid JSON: " + std::string(e.what()));
  }
  return parse_config(j, path.parent_path());
}

void apply_overrides(ExperimentConfig& config, const std::optional<std::vector<int>>& n_list,
                     const std::optional<std::uint64_t>& seed, const std::optional<std::string>& out) {
  if (n_list) config.n_list = *n_list;
  if (seed) config.seed = *seed;
  if (out) config.output_dir = *out;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t value) {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(value));
  return buffer;
}

}  // namespace excc::cli
