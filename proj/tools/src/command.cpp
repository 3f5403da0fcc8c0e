#include <CLI11.hpp>
#include <ostream>

#include "excc_cli/experiments.hpp"

namespace excc::cli {

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"excc: extremal functions for convex bodies, experiment runner"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<int> n_override;
  std::uint64_t seed_override = 0;
  std::string out_override;
  auto* run = app.add_subcommand("run", "Run an experiment config and write its artifacts");
  run->add_option("config", config_path, "Experiment config (JSON)")->required();
  auto* n_opt = run->add_option("--n", n_override, "Override the n list");
  auto* seed_opt = run->add_option("--seed", seed_override, "Override the seed");
  auto* out_opt = run->add_option("--out", out_override, "Override the output directory");

  std::string plot_dir;
  auto* plots = app.add_subcommand("plots", "Write plotting scripts for an artifact directory");
  plots->add_option("dir", plot_dir, "Artifact directory")->required();

  std::string validate_path;
  auto* check = app.add_subcommand("validate", "Parse and validate a config without running it");
  check->add_option("config", validate_path, "Experiment config (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*run) {
      auto config = load_config(config_path);
      apply_overrides(config, n_opt->count() ? std::optional(n_override) : std::nullopt,
                      seed_opt->count() ? std::optional(seed_override) : std::nullopt,
                      out_opt->count() ? std::optional(out_override) : std::nullopt);
      const auto result = run_experiment(config);
      out << to_string(config.experiment) << ": wrote " << result.artifacts.size() << " artifacts to "
          << result.output_dir.string() << " in " << result.wall_seconds << " s\n";
      for (const auto& flag : result.flags) out << "flag: " << flag << "\n";
    } else if (*plots) {
      for (const auto& path : emit_plots(plot_dir)) out << path.string() << "\n";
    } else if (*check) {
      const auto config = load_config(validate_path);
      validate(config);
      out << validate_path << ": ok (" << to_string(config.experiment) << ")\n";
    }
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace excc::cli
