#include "excc_cli/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include <excc/extremal_lab.hpp>
#include <excc/parallel.hpp>

#ifndef EXCC_VERSION
#define EXCC_VERSION "0.0.0"
#endif

namespace excc::cli {
namespace {

using Row = std::vector<std::string>;

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string num(double v) { return format_double(v); }

class ArtifactWriter {
 public:
  explicit ArtifactWriter(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  void csv(const std::string& name, const Row& header, const std::vector<Row>& rows) {
    std::ostringstream body;
    write_line(body, header);
    for (const auto& row : rows) write_line(body, row);
    emit(name, body.str(), rows.size());
  }

  void json(const std::string& name, const Json& value) {
    emit(name, value.dump(2) + "\n", 1);
  }

  const std::vector<Artifact>& artifacts() const noexcept { return artifacts_; }
  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  static void write_line(std::ostream& out, const Row& row) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }

  void emit(const std::string& name, const std::string& bytes, std::size_t rows) {
    std::ofstream out(dir_ / name, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + (dir_ / name).string());
    out << bytes;
    artifacts_.push_back({name, rows, hex64(fnv1a(bytes))});
  }

  std::filesystem::path dir_;
  std::vector<Artifact> artifacts_;
};

const Json& need(const Json& raw, const char* key) {
  if (!raw.contains(key)) throw ConfigError(std::string("config is missing \"") + key + "\"");
  return raw.at(key);
}

template <typename T>
T get_or(const Json& raw, const char* key, T fallback) {
  if (!raw.contains(key)) return fallback;
  try {
    return raw.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ConfigError(std::string("field \"") + key + "\" has the wrong type");
  }
}

Row point_header(int dim) {
  Row header;
  for (int i = 1; i <= dim; ++i) {
    header.push_back("z_re_" + std::to_string(i));
    header.push_back("z_im_" + std::to_string(i));
  }
  return header;
}

Row point_cells(const Point& z) {
  Row row;
  for (const auto& c : z) {
    row.push_back(num(c.real()));
    row.push_back(num(c.imag()));
  }
  return row;
}

Estimator config_estimator(const Json& raw) {
  try {
    return estimator_from_string(get_or<std::string>(raw, "estimator", "bergman"));
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

std::vector<Body> config_bodies(const Json& raw) {
  std::vector<Body> bodies;
  if (raw.contains("bodies")) {
    for (const auto& b : raw.at("bodies")) bodies.push_back(body_from_json(b));
  } else {
    bodies.push_back(body_from_json(need(raw, "body")));
  }
  if (bodies.empty()) throw ConfigError("\"bodies\" is empty");
  return bodies;
}

std::vector<double> config_alphas(const Json& raw) {
  if (raw.contains("alphas")) return raw.at("alphas").get<std::vector<double>>();
  const int count = get_or<int>(raw, "alpha_count", 21);
  std::vector<double> alphas;
  for (int k = 1; k <= count; ++k) alphas.push_back(static_cast<double>(k) / (count + 1));
  return alphas;
}

// ---- experiments -----------------------------------------------------------

void run_lattice(const ExperimentConfig& config, ArtifactWriter& out, RunResult& result) {
  const Body body = body_from_json(need(config.raw, "body"));
  Json sizes = Json::object();
  for (int n : config.n_list) {
    const auto basis = lattice(body, n);
    Row header{"index"};
    for (int i = 1; i <= body.dim(); ++i) header.push_back("j_" + std::to_string(i));
    header.push_back("c_degree");
    std::vector<Row> rows;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Row row{std::to_string(k)};
      for (int e : basis.indices[k]) row.push_back(std::to_string(e));
      row.push_back(std::to_string(basis.degrees[k]));
      rows.push_back(std::move(row));
    }
    out.csv("lattice_n" + std::to_string(n) + ".csv", header, rows);
    sizes[std::to_string(n)] = basis.size();
  }
  result.summary = {{"body", body.describe()}, {"dimension", sizes}};
}

void write_field(ArtifactWriter& out, const std::string& name, const FieldResult& field) {
  Row header = point_header(field.grid.dim());
  header.insert(header.end(), {"value", "estimator", "n"});
  std::vector<Row> rows;
  for (std::size_t i = 0; i < field.points.size(); ++i) {
    Row row = point_cells(field.points[i]);
    row.push_back(num(field.values[i]));
    row.push_back(to_string(field.estimator));
    row.push_back(std::to_string(field.n));
    rows.push_back(std::move(row));
  }
  out.csv(name, header, rows);
}

void run_extremal(const ExperimentConfig& config, ArtifactWriter& out, RunResult& result) {
  const Body body = body_from_json(need(config.raw, "body"));
  const MeasureModel measure = measure_from_json(need(config.raw, "measure"), config.base_dir);
  const GridSpec grid = grid_from_json(need(config.raw, "grid"));
  const Estimator estimator = config_estimator(config.raw);

  std::optional<FieldResult> reference;
  if (config.raw.contains("set")) {
    const CompactSet set = compact_set_from_json(config.raw.at("set"));
    try {
      reference = field_reference(body, set, grid);
      write_field(out, "reference.csv", *reference);
    } catch (const NoClosedForm& e) {
      result.flags.push_back(std::string("no closed-form reference: ") + e.what());
    }
  }
  if (estimator == Estimator::Reference && !reference)
    throw ConfigError("estimator \"reference\" needs a \"set\" with a closed-form extremal function");

  std::vector<Row> convergence;
  Json runs = Json::array();
  for (int n : config.n_list) {
    FieldResult field = estimator == Estimator::Reference ? *reference : field_estimate(body, measure, n, grid, estimator);
    field.n = n;
    write_field(out, "field_n" + std::to_string(n) + ".csv", field);
    if (reference) {
      const auto entry = field_compare(field, *reference);
      convergence.push_back({std::to_string(n), num(entry.sup_error), num(entry.mean_abs_error)});
      runs.push_back({{"n", n}, {"sup_err", entry.sup_error}, {"mae", entry.mean_abs_error}});
    }
  }
  if (reference) out.csv("convergence.csv", {"n", "sup_err", "mae"}, convergence);
  result.summary = {{"body", body.describe()},
                    {"measure", measure.describe()},
                    {"estimator", to_string(estimator)},
                    {"convergence", runs}};
}

void run_ball_study(const ExperimentConfig& config, ArtifactWriter& out, RunResult& result) {
  const double p = need(config.raw, "p").get<double>();
  const auto radii = need(config.raw, "radii").get<std::vector<double>>();
  const int dim = get_or<int>(config.raw, "d", 2);
  const double margin = get_or<double>(config.raw, "margin", 0.02);
  const double slack = get_or<double>(config.raw, "slack_margin", 0.005);
  Json rows_json = Json::array();
  for (int n : config.n_list) {
    const auto rows = ball_diagonal_study(p, n, radii, dim);
    std::vector<Row> cells;
    for (const auto& r : rows) {
      cells.push_back({num(r.r), num(r.lower), num(r.estimate), num(r.onb_sup), num(r.upper), num(r.margin_lower),
                       num(r.margin_upper)});
      const double worst = std::min(r.margin_lower, r.margin_upper);
      std::string status = worst > margin ? "strict" : worst > slack ? "slack" : "fail";
      if (status != "strict") {
        std::ostringstream flag;
        flag << "n=" << n << " r=" << r.r << ": separation margin " << worst << " below " << margin
             << (status == "slack" ? ", passes at the slack margin " : ", fails the slack margin ") << slack;
        result.flags.push_back(flag.str());
      }
      rows_json.push_back({{"n", n}, {"r", r.r}, {"estimate", r.estimate}, {"margin_lower", r.margin_lower},
                           {"margin_upper", r.margin_upper}, {"status", status}});
    }
    out.csv("ball_study_n" + std::to_string(n) + ".csv",
            {"r", "lower", "estimate", "onb_sup", "upper", "margin_lower", "margin_upper"}, cells);
  }
  result.summary = {{"p", p}, {"d", dim}, {"margin", margin}, {"slack_margin", slack}, {"rows", rows_json}};
}

void run_rates(const ExperimentConfig& config, ArtifactWriter& out, RunResult& result) {
  const auto bodies = config_bodies(config.raw);
  const TwoVarFunction fn = function_from_json(need(config.raw, "function"));
  const int n_max = get_or<int>(config.raw, "n_max", config.n_list.empty() ? 400 : config.n_list.back());
  const bool with_sup = get_or<bool>(config.raw, "sup", true);
  const int side = get_or<int>(config.raw, "sup_side", 100);
  const double tolerance = get_or<double>(config.raw, "tolerance", 0.01);

  std::vector<Row> rows;
  Json summary = Json::array();
  for (const auto& body : bodies) {
    RateReport report;
    if (with_sup) {
      report = sup_vs_l2_rate(fn, body, n_max, side).report;
    } else {
      report = rate_study(body, fn, n_max, false);
    }
    for (std::size_t i = 0; i < report.ns.size(); ++i) {
      rows.push_back({std::to_string(report.ns[i]), num(std::exp(report.log_errors_l2[i])),
                      with_sup ? num(std::exp(report.log_errors_sup[i])) : "", report.body, report.descriptor});
    }
    Json entry = {{"body", report.body},
                  {"descriptor", report.descriptor},
                  {"fitted_l2", report.fitted_l2},
                  {"target", report.target},
                  {"target_provenance", report.target_provenance},
                  {"fit_window_start_n", report.ns[report.window_start]},
                  {"pass", std::abs(report.fitted_l2 - report.target) <= tolerance * report.target}};
    if (with_sup) {
      entry["fitted_sup"] = report.fitted_sup;
      entry["sup_l2_agree"] = std::abs(report.fitted_sup - report.fitted_l2) <= 0.03 * report.fitted_l2;
    }
    summary.push_back(entry);
  }
  out.csv("rates.csv", {"n", "error_l2", "error_sup", "body", "descriptor"}, rows);
  result.summary = {{"n_max", n_max}, {"tolerance", tolerance}, {"bodies", summary}};
  out.json("summary.json", result.summary);
}

void run_minimax(const ExperimentConfig& config, ArtifactWriter& out, RunResult& result) {
  const int grid_count = get_or<int>(config.raw, "grid_count", 33);
  const std::string target_name = get_or<std::string>(config.raw, "target", "xy");
  if (target_name != "xy" && target_name != "half-sum") throw ConfigError("target must be \"xy\" or \"half-sum\"");
  const auto target = target_name == "xy" ? MinimaxTarget::Product : MinimaxTarget::HalfSum;
  const double expected = target == MinimaxTarget::Product ? 0.25 : 0.0;
  std::vector<Row> rows;
  Json entries = Json::array();
  for (int n : config.n_list) {
    const auto r = minimax_xy(n, grid_count, target);
    rows.push_back({std::to_string(n), num(r.value), std::to_string(r.iterations)});
    entries.push_back({{"n", n}, {"value", r.value}, {"pass", n == 0 || std::abs(r.value - expected) <= 1e-3}});
  }
  out.csv("minimax.csv", {"n", "value", "iterations"}, rows);
  result.summary = {{"target", target_name}, {"grid_count", grid_count}, {"expected", expected}, {"runs", entries}};
}

void run_random(const ExperimentConfig& config, ArtifactWriter& out, RunResult& result) {
  const Body body = body_from_json(need(config.raw, "body"));
  const MeasureModel measure = measure_from_json(need(config.raw, "measure"), config.base_dir);
  const GridSpec grid = grid_from_json(need(config.raw, "grid"));
  const CoefficientLaw law = law_from_json(config.raw.value("law", Json::object()));
  const int free_axis = get_or<int>(config.raw, "slice_axis", 0);
  const double slice_radius = get_or<double>(config.raw, "slice_radius", 1.0);

  Json runs = Json::array();
  for (int n : config.n_list) {
    auto basis = std::make_shared<const OrthoBasis>(orthonormal_basis(measure, body, n));
    EnsembleConfig ens{basis, law, config.samples, *config.seed, grid};
    const auto field = ensemble_mean_field(ens);

    Row header = point_header(grid.dim());
    header.insert(header.end(), {"mean", "std", "n", "samples"});
    std::vector<Row> rows;
    for (std::size_t i = 0; i < field.points.size(); ++i) {
      Row row = point_cells(field.points[i]);
      row.insert(row.end(), {num(field.mean[i]), num(field.stddev[i]), std::to_string(n), std::to_string(config.samples)});
      rows.push_back(std::move(row));
    }
    out.csv("mean_field_n" + std::to_string(n) + ".csv", header, rows);

    std::vector<std::vector<Complex>> per_sample(static_cast<std::size_t>(config.samples));
    parallel_for(per_sample.size(), [&](std::size_t i) {
      const auto h = sample_polynomial(ens, static_cast<int>(i));
      const double angle = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.5) / config.samples;
      Point fixed(static_cast<std::size_t>(body.dim()), std::polar(slice_radius, angle));
      per_sample[i] = slice_zeros(h, free_axis, fixed);
    });
    std::vector<Complex> roots;
    std::vector<Row> root_rows;
    for (std::size_t i = 0; i < per_sample.size(); ++i) {
      for (const auto& r : per_sample[i]) {
        roots.push_back(r);
        root_rows.push_back({num(r.real()), num(r.imag()), std::to_string(i)});
      }
    }
    out.csv("roots_n" + std::to_string(n) + ".csv", {"re", "im", "sample_index"}, root_rows);

    Json stats = {{"seed", *config.seed},
                  {"n", n},
                  {"samples", config.samples},
                  {"law", law.describe()},
                  {"body", body.describe()},
                  {"measure", measure.describe()},
                  {"hypothesis_class", field.hypothesis_class},
                  {"clipped_field_points", field.clipped},
                  {"slice_axis", free_axis},
                  {"slice_radius", slice_radius},
                  {"root_count", roots.size()}};
    if (roots.size() >= 100) {
      const auto z = zero_statistics(roots);
      stats["mean_log_abs_root"] = z.mean_log_abs;
      stats["clipped_roots"] = z.clipped;
      stats["quantile_levels"] = z.quantile_levels;
      stats["log_abs_quantiles"] = z.log_abs_quantiles;
      stats["ks_angle"] = z.ks_angle;
    } else {
      result.flags.push_back("n=" + std::to_string(n) + ": fewer than 100 roots, zero statistics skipped");
    }
    out.json("stats_n" + std::to_string(n) + ".json", stats);
    runs.push_back(stats);
  }
  result.summary = {{"runs", runs}};
}

void run_zero_stats(const ExperimentConfig& config, ArtifactWriter& out, RunResult& result) {
  const Body body = body_from_json(need(config.raw, "body"));
  if (body.dim() != 2) throw ConfigError("zero-stats needs a planar body");
  const MeasureModel measure = measure_from_json(need(config.raw, "measure"), config.base_dir);
  const CoefficientLaw law = law_from_json(config.raw.value("law", Json::object()));
  const int pairs = get_or<int>(config.raw, "pairs", 1);
  const int starts = get_or<int>(config.raw, "starts", 200);
  if (pairs < 1 || starts < 1) throw ConfigError("pairs and starts must be positive");

  Json runs = Json::array();
  for (int n : config.n_list) {
    auto basis = std::make_shared<const OrthoBasis>(orthonormal_basis(measure, body, n));
    EnsembleConfig ens{basis, law, 2 * pairs, *config.seed, GridSpec::single(std::vector<double>(2, 1.0))};
    std::vector<Row> rows;
    std::vector<double> log_moduli;
    std::vector<Complex> first, second;
    for (int k = 0; k < pairs; ++k) {
      const auto h1 = sample_polynomial(ens, 2 * k);
      const auto h2 = sample_polynomial(ens, 2 * k + 1);
      const auto newton_seed = CounterRng::keyed(*config.seed, n, k).next_u64();
      for (const auto& z : common_zeros_newton(h1, h2, starts, newton_seed)) {
        rows.push_back({std::to_string(k), num(z[0].real()), num(z[0].imag()), num(z[1].real()), num(z[1].imag())});
        first.push_back(z[0]);
        second.push_back(z[1]);
        for (const auto& c : z) log_moduli.push_back(std::abs(std::log(std::abs(c))));
      }
    }
    out.csv("common_zeros_n" + std::to_string(n) + ".csv", {"pair_index", "re_1", "im_1", "re_2", "im_2"}, rows);
    Json stats = {{"seed", *config.seed}, {"n", n}, {"pairs", pairs}, {"starts", starts}, {"found", rows.size()},
                  {"law", law.describe()}, {"hypothesis_class", hypothesis_class(measure)}};
    if (!log_moduli.empty()) {
      std::sort(log_moduli.begin(), log_moduli.end());
      stats["median_abs_log_modulus"] = log_moduli[log_moduli.size() / 2];
      stats["ks_angle_1"] = angular_ks(first);
      stats["ks_angle_2"] = angular_ks(second);
    } else {
      result.flags.push_back("n=" + std::to_string(n) + ": Newton found no common zeros");
    }
    out.json("zero_stats_n" + std::to_string(n) + ".json", stats);
    runs.push_back(stats);
  }
  result.summary = {{"runs", runs}};
}

void run_envelope(const ExperimentConfig& config, ArtifactWriter& out, RunResult& result) {
  const double p = need(config.raw, "p").get<double>();
  const MeasureModel measure = measure_from_json(need(config.raw, "measure"), config.base_dir);
  const GridSpec grid = grid_from_json(need(config.raw, "grid"));
  const auto alphas = config_alphas(config.raw);
  Json runs = Json::array();
  for (int n : config.n_list) {
    const auto rows = triangle_envelope_study(p, alphas, grid.points(), n, measure);
    Row header = point_header(grid.dim());
    header.insert(header.end(), {"cp_estimate", "envelope", "best_alpha", "gap"});
    std::vector<Row> cells;
    double worst_gap = -std::numeric_limits<double>::infinity();
    for (const auto& r : rows) {
      Row row = point_cells(r.z);
      row.insert(row.end(), {num(r.cp_estimate), num(r.envelope), num(r.best_alpha), num(r.gap)});
      cells.push_back(std::move(row));
      worst_gap = std::max(worst_gap, r.gap);
    }
    out.csv("envelope_n" + std::to_string(n) + ".csv", header, cells);
    runs.push_back({{"n", n}, {"max_gap", worst_gap}});
  }
  result.summary = {{"p", p}, {"alphas", alphas}, {"runs", runs}};
}

void dispatch(const ExperimentConfig& config, ArtifactWriter& out, RunResult& result) {
  switch (config.experiment) {
    case Experiment::Lattice:
      return run_lattice(config, out, result);
    case Experiment::Extremal:
      return run_extremal(config, out, result);
    case Experiment::BallStudy:
      return run_ball_study(config, out, result);
    case Experiment::Rates:
      return run_rates(config, out, result);
    case Experiment::MinimaxXy:
      return run_minimax(config, out, result);
    case Experiment::Random:
      return run_random(config, out, result);
    case Experiment::ZeroStats:
      return run_zero_stats(config, out, result);
    case Experiment::TriangleEnvelope:
      return run_envelope(config, out, result);
  }
}

}  // namespace

TwoVarFunction function_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("\"function\" must be an object");
  const auto expansion_name = get_or<std::string>(j, "expansion", "taylor");
  if (expansion_name != "taylor" && expansion_name != "chebyshev")
    throw ConfigError("expansion must be \"taylor\" or \"chebyshev\"");
  const auto expansion = expansion_name == "taylor" ? AnalyticFunction1D::Expansion::Taylor
                                                    : AnalyticFunction1D::Expansion::Chebyshev;
  auto factor = [&](const char* key) {
    const Json& v = need(j, key);
    if (v.is_number() && v.get<double>() == 0.0) return AnalyticFunction1D::zero(expansion);
    return AnalyticFunction1D::geometric(v.get<double>(), expansion);
  };
  const auto form = get_or<std::string>(j, "form", "separable");
  if (form == "separable") return TwoVarFunction::separable(factor("rho_f"), factor("rho_g"));
  if (form == "diagonal") return TwoVarFunction::diagonal(factor("r"));
  throw ConfigError("function form must be \"separable\" or \"diagonal\"");
}

CoefficientLaw law_from_json(const Json& j) {
  const auto kind = get_or<std::string>(j, "kind", "gaussian");
  if (kind == "gaussian") return CoefficientLaw::gaussian();
  if (kind == "uniform-disk") return CoefficientLaw::uniform_disk(get_or<double>(j, "radius", 1.0));
  throw ConfigError("law kind must be \"gaussian\" or \"uniform-disk\"");
}

void validate(const ExperimentConfig& config) {
  const auto& raw = config.raw;
  const bool needs_n = config.experiment != Experiment::Rates;
  if (needs_n && config.n_list.empty()) throw ConfigError("config needs a non-empty \"n\" list");
  for (std::size_t i = 0; i < config.n_list.size(); ++i) {
    if (config.n_list[i] < 0) throw ConfigError("n values must be nonnegative");
    if (i && config.n_list[i] <= config.n_list[i - 1]) throw ConfigError("n list must be strictly increasing");
  }
  if (is_stochastic(config.experiment) && !config.seed) throw ConfigError("stochastic experiments need a \"seed\"");
  if (config.samples < 1) throw ConfigError("samples must be at least 1");

  switch (config.experiment) {
    case Experiment::Lattice:
      body_from_json(need(raw, "body"));
      break;
    case Experiment::Extremal:
      body_from_json(need(raw, "body"));
      measure_from_json(need(raw, "measure"), config.base_dir);
      grid_from_json(need(raw, "grid"));
      config_estimator(raw);
      if (raw.contains("set")) compact_set_from_json(raw.at("set"));
      break;
    case Experiment::BallStudy: {
      const double p = need(raw, "p").get<double>();
      if (!(p > 0.0 && p <= 1.0)) throw ConfigError("p must lie in (0, 1]");
      if (need(raw, "radii").get<std::vector<double>>().empty()) throw ConfigError("radii must be non-empty");
      break;
    }
    case Experiment::Rates:
      for (const auto& b : config_bodies(raw))
        if (b.dim() != 2) throw ConfigError("rate experiments need planar bodies");
      function_from_json(need(raw, "function"));
      if (get_or<int>(raw, "n_max", 400) < 8) throw ConfigError("n_max must be at least 8");
      break;
    case Experiment::MinimaxXy:
      if (get_or<int>(raw, "grid_count", 33) < 2) throw ConfigError("grid_count must be at least 2");
      break;
    case Experiment::Random:
    case Experiment::ZeroStats:
      body_from_json(need(raw, "body"));
      measure_from_json(need(raw, "measure"), config.base_dir);
      law_from_json(raw.value("law", Json::object()));
      if (config.experiment == Experiment::Random) grid_from_json(need(raw, "grid"));
      break;
    case Experiment::TriangleEnvelope: {
      need(raw, "p");
      measure_from_json(need(raw, "measure"), config.base_dir);
      grid_from_json(need(raw, "grid"));
      for (double a : config_alphas(raw))
        if (!(a > 0.0 && a < 1.0)) throw ConfigError("alphas must lie in (0, 1)");
      break;
    }
  }
}

RunResult run_experiment(const ExperimentConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  result.output_dir = config.output_dir;
  ArtifactWriter out(result.output_dir);
  dispatch(config, out, result);
  result.artifacts = out.artifacts();
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const Json canonical = config.to_json();
  Json artifacts = Json::array();
  for (const auto& a : result.artifacts) artifacts.push_back({{"file", a.file}, {"rows", a.rows}, {"checksum", a.checksum}});
  Json manifest = {{"experiment", to_string(config.experiment)},
                   {"config", canonical},
                   {"config_hash", hex64(fnv1a(canonical.dump()))},
                   {"seed", config.seed ? Json(*config.seed) : Json(nullptr)},
                   {"version", EXCC_VERSION},
                   {"threads", worker_count()},
                   {"wall_time_seconds", result.wall_seconds},
                   {"artifacts", artifacts},
                   {"flags", result.flags},
                   {"summary", result.summary}};
  std::ofstream(result.output_dir / "manifest.json") << manifest.dump(2) << "\n";
  return result;
}

}  // namespace excc::cli
