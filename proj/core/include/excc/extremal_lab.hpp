#pragma once

#include <string>
#include <vector>

#include "excc/body.hpp"
#include "excc/measures.hpp"
#include "excc/orthopoly.hpp"
#include "excc/planar.hpp"

namespace excc {

/// Polar grid: per-coordinate moduli times a phase sample.
struct GridSpec {
  std::vector<std::vector<double>> moduli;
  /// Fixed phase angle per coordinate, used when phase_count == 0.
  std::vector<double> phase_angles;
  /// When positive, each coordinate takes phase_count equally spaced phases.
  int phase_count = 0;

  /// count moduli per coordinate, evenly spaced in [r_min, r_max].
  static GridSpec uniform(int dim, double r_min, double r_max, int count);
  /// Cartesian product of the listed moduli, default phases.
  static GridSpec from_moduli(std::vector<std::vector<double>> moduli);
  /// One point with the given moduli, default phases.
  static GridSpec single(std::vector<double> moduli);
  /// Generic phases (1, e^{0.7i}, e^{1.4i}, ...).
  static std::vector<double> default_phases(int dim);

  int dim() const noexcept { return static_cast<int>(moduli.size()); }
  std::size_t budget() const;
  std::vector<Point> points() const;
  void validate() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Compact set K with a closed-form extremal function.
struct CompactSet {
  enum class Kind { Product, Ball };

  static CompactSet product(ProductSet set);
  static CompactSet ball(int dim);

  Kind kind = Kind::Product;
  ProductSet factors;
  int ball_dim = 0;

  int dim() const noexcept { return kind == Kind::Ball ? ball_dim : factors.dim(); }
  std::string describe() const;
};

enum class Estimator { Bergman, OnbSup, BracketLower, Reference };

std::string to_string(Estimator estimator);
Estimator estimator_from_string(const std::string& name);

struct FieldResult {
  GridSpec grid;
  std::vector<Point> points;
  std::vector<double> values;
  Estimator estimator = Estimator::Bergman;
  int n = 0;
  std::string body;
  std::string measure;
  std::string set;
};

struct ConvergenceEntry {
  int n = 0;
  double sup_error = 0.0;
  double mean_abs_error = 0.0;
};

struct ConvergenceReport {
  std::string reference;
  std::vector<ConvergenceEntry> entries;
};

/// Estimator field over the grid. onb_sup uses the top C-degree layer.
FieldResult field_estimate(const Body& body, const MeasureModel& measure, int n, const GridSpec& grid,
                           Estimator estimator);

/// Closed-form V_{C,K}: products of planar compacta, or the ball with the
/// axis cross / simplex. Throws NoClosedForm otherwise.
FieldResult field_reference(const Body& body, const CompactSet& set, const GridSpec& grid);

ConvergenceEntry field_compare(const FieldResult& estimate, const FieldResult& reference);

/// Points with value < log_r.
std::vector<bool> level_set(const FieldResult& field, double log_r);

/// Z(K) indicator: value below 1e-6 plus the bracket width.
std::vector<bool> hull_mask(const FieldResult& field, double bracket_width);

struct BallDiagonalRow {
  double r = 0.0;
  double lower = 0.0;     // V_{C_0, B}
  double estimate = 0.0;  // (1/2n) log S_n for C_p under the sphere measure
  double onb_sup = 0.0;   // top-layer orthonormal-basis estimate
  double upper = 0.0;     // V_{Sigma, B}
  double margin_lower = 0.0;
  double margin_upper = 0.0;
};

/// Diagonal points (r, ..., r) of C^d, sphere measure, C = C_p.
std::vector<BallDiagonalRow> ball_diagonal_study(double p, int n, const std::vector<double>& radii, int dim = 2);

struct EnvelopeRow {
  Point z;
  double cp_estimate = 0.0;
  double envelope = 0.0;  // max over the alpha grid of the T_alpha estimates
  double best_alpha = 0.0;
  double gap = 0.0;       // cp_estimate - envelope
};

/// Compares C_p against the upper envelope of its tangent triangles.
std::vector<EnvelopeRow> triangle_envelope_study(double p, const std::vector<double>& alphas,
                                                 const std::vector<Point>& points, int n,
                                                 const MeasureModel& measure);

struct StirlingCheck {
  double value = 0.0;
  bool passes = false;
};

/// f(lambda_0) < log 2 for 0 < lambda_0 < 1/4.
StirlingCheck stirling_bound_check(double lambda0);

}  // namespace excc
