#include <fstream>
#include <regex>
#include <set>

#include "excc_cli/experiments.hpp"

namespace excc::cli {
namespace {

const char* kPrelude =
    "import csv\n"
    "import json\n"
    "import math\n"
    "import os\n"
    "import matplotlib\n"
    "matplotlib.use(\"Agg\")\n"
    "import matplotlib.pyplot as plt\n\n"
    "HERE = os.path.dirname(os.path.abspath(__file__))\n\n\n"
    "def rows(name):\n"
    "    with open(os.path.join(HERE, name), newline=\"\") as handle:\n"
    "        return list(csv.DictReader(handle))\n\n\n";

std::string field_script(const std::string& csv, const std::string& value_column) {
  return std::string(kPrelude) + "data = rows(\"" + csv + "\")\n" +
         "r1 = [math.hypot(float(r[\"z_re_1\"]), float(r[\"z_im_1\"])) for r in data]\n"
         "r2 = [math.hypot(float(r[\"z_re_2\"]), float(r[\"z_im_2\"])) if \"z_re_2\" in r else 0.0 for r in data]\n"
         "v = [float(r[\"" + value_column + "\"]) for r in data]\n"
         "fig, ax = plt.subplots()\n"
         "if len(set(r1)) > 1 and len(set(r2)) > 1:\n"
         "    tc = ax.tricontourf(r1, r2, v, levels=20)\n"
         "    fig.colorbar(tc, ax=ax, label=\"" + value_column + "\")\n"
         "else:\n"
         "    ax.plot(r1 if len(set(r1)) > 1 else r2, v, \"o-\")\n"
         "ax.set_xlabel(\"|z_1|\")\n"
         "ax.set_ylabel(\"|z_2|\")\n"
         "ax.set_title(\"" + csv + "\")\n"
         "fig.savefig(os.path.join(HERE, \"" + csv + ".png\"), dpi=150)\n";
}

std::string rates_script() {
  return std::string(kPrelude) +
         "data = rows(\"rates.csv\")\n"
         "summary = {}\n"
         "path = os.path.join(HERE, \"summary.json\")\n"
         "if os.path.exists(path):\n"
         "    with open(path) as handle:\n"
         "        summary = {b[\"body\"]: b for b in json.load(handle)[\"bodies\"]}\n"
         "fig, ax = plt.subplots()\n"
         "for body in dict.fromkeys(r[\"body\"] for r in data):\n"
         "    sel = [r for r in data if r[\"body\"] == body]\n"
         "    n = [int(r[\"n\"]) for r in sel]\n"
         "    err = [float(r[\"error_l2\"]) for r in sel]\n"
         "    line, = ax.semilogy(n, err, label=body + \" L2\")\n"
         "    if sel[0][\"error_sup\"]:\n"
         "        ax.semilogy(n, [float(r[\"error_sup\"]) for r in sel], \":\", color=line.get_color())\n"
         "    if body in summary and err[-1] > 0:\n"
         "        rate = summary[body][\"target\"]\n"
         "        guide = [err[-1] * rate ** (k - n[-1]) for k in n]\n"
         "        ax.semilogy(n, guide, \"--\", color=line.get_color(), alpha=0.6, label=\"target %.4f\" % rate)\n"
         "ax.set_xlabel(\"n\")\n"
         "ax.set_ylabel(\"best approximation error\")\n"
         "ax.legend(fontsize=7)\n"
         "fig.savefig(os.path.join(HERE, \"rates.png\"), dpi=150)\n";
}

std::string xy_script(const std::string& csv, const std::string& x, const std::vector<std::string>& ys, bool log_y) {
  std::string out = std::string(kPrelude) + "data = rows(\"" + csv + "\")\nfig, ax = plt.subplots()\n";
  for (const auto& y : ys) {
    out += "ax." + std::string(log_y ? "semilogy" : "plot") + "([float(r[\"" + x + "\"]) for r in data], [float(r[\"" + y +
           "\"]) for r in data], \"o-\", label=\"" + y + "\")\n";
  }
  out += "ax.set_xlabel(\"" + x + "\")\nax.legend()\nfig.savefig(os.path.join(HERE, \"" + csv + ".png\"), dpi=150)\n";
  return out;
}

std::string roots_script(const std::string& csv, const std::string& re, const std::string& im) {
  return std::string(kPrelude) + "data = rows(\"" + csv + "\")\n" +
         "fig, ax = plt.subplots()\n"
         "ax.scatter([float(r[\"" + re + "\"]) for r in data], [float(r[\"" + im + "\"]) for r in data], s=2)\n"
         "t = [2 * math.pi * k / 400 for k in range(401)]\n"
         "ax.plot([math.cos(s) for s in t], [math.sin(s) for s in t], \"k-\", lw=0.5)\n"
         "ax.set_aspect(\"equal\")\n"
         "fig.savefig(os.path.join(HERE, \"" + csv + ".png\"), dpi=150)\n";
}

}  // namespace

std::vector<std::filesystem::path> emit_plots(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw ConfigError("artifact directory does not exist: " + dir.string());
  std::set<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".csv") names.insert(entry.path().filename().string());
  if (names.empty()) throw ConfigError("no CSV artifacts in " + dir.string());

  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& csv, const std::string& text) {
    const auto path = dir / ("plot_" + std::filesystem::path(csv).stem().string() + ".py");
    std::ofstream(path) << text;
    written.push_back(path);
  };
  const std::regex field(R"((field_n\d+|reference)\.csv)");
  for (const auto& csv : names) {
    if (std::regex_match(csv, field)) {
      emit(csv, field_script(csv, "value"));
    } else if (csv.rfind("mean_field_n", 0) == 0) {
      emit(csv, field_script(csv, "mean"));
    } else if (csv == "rates.csv") {
      emit(csv, rates_script());
    } else if (csv == "convergence.csv") {
      emit(csv, xy_script(csv, "n", {"sup_err", "mae"}, true));
    } else if (csv == "minimax.csv") {
      emit(csv, xy_script(csv, "n", {"value"}, false));
    } else if (csv.rfind("ball_study_n", 0) == 0) {
      emit(csv, xy_script(csv, "r", {"lower", "estimate", "upper"}, false));
    } else if (csv.rfind("roots_n", 0) == 0) {
      emit(csv, roots_script(csv, "re", "im"));
    } else if (csv.rfind("common_zeros_n", 0) == 0) {
      emit(csv, roots_script(csv, "re_1", "im_1"));
    } else if (csv.rfind("envelope_n", 0) == 0) {
      emit(csv, xy_script(csv, "best_alpha", {"gap"}, false));
    } else if (csv.rfind("lattice_n", 0) == 0) {
      emit(csv, xy_script(csv, "j_1", {"j_2"}, false));
    }
  }
  if (written.empty()) throw ConfigError("no plottable artifacts in " + dir.string());
  return written;
}

}  // namespace excc::cli
