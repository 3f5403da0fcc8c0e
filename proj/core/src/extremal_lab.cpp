#include "excc/extremal_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "excc/error.hpp"
#include "excc/parallel.hpp"

namespace excc {

GridSpec GridSpec::uniform(int dim, double r_min, double r_max, int count) {
  if (dim < 1 || count < 1) throw DomainError("grid needs positive dimension and count");
  std::vector<double> axis;
  for (int k = 0; k < count; ++k)
    axis.push_back(count == 1 ? r_min : r_min + (r_max - r_min) * k / (count - 1.0));
  GridSpec grid{std::vector<std::vector<double>>(static_cast<std::size_t>(dim), axis), default_phases(dim), 0};
  grid.validate();
  return grid;
}

GridSpec GridSpec::from_moduli(std::vector<std::vector<double>> moduli) {
  const int dim = static_cast<int>(moduli.size());
  GridSpec grid{std::move(moduli), default_phases(dim), 0};
  grid.validate();
  return grid;
}

GridSpec GridSpec::single(std::vector<double> moduli) {
  std::vector<std::vector<double>> axes;
  for (double r : moduli) axes.push_back({r});
  return from_moduli(std::move(axes));
}

std::vector<double> GridSpec::default_phases(int dim) {
  std::vector<double> out;
  for (int i = 0; i < dim; ++i) out.push_back(0.7 * i);
  return out;
}

std::size_t GridSpec::budget() const {
  std::size_t total = 1;
  for (const auto& axis : moduli) total *= axis.size() * (phase_count > 0 ? static_cast<std::size_t>(phase_count) : 1);
  return total;
}

void GridSpec::validate() const {
  if (moduli.empty()) throw DomainError("grid needs at least one coordinate");
  for (const auto& axis : moduli) {
    if (axis.empty()) throw DomainError("grid coordinate has no moduli");
    for (double r : axis)
      if (!(r >= 0.0)) throw DomainError("grid moduli must be nonnegative");
  }
  if (phase_count < 0) throw DomainError("phase count must be nonnegative");
  if (phase_count == 0 && phase_angles.size() != moduli.size())
    throw DomainError("grid needs one fixed phase per coordinate");
}

std::vector<Point> GridSpec::points() const {
  validate();
  std::vector<std::vector<Complex>> axes;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    std::vector<Complex> axis;
    for (double r : moduli[i]) {
      if (phase_count > 0) {
        for (int k = 0; k < phase_count; ++k) axis.push_back(std::polar(r, 2.0 * std::numbers::pi * k / phase_count));
      } else {
        axis.push_back(std::polar(r, phase_angles[i]));
      }
    }
    axes.push_back(std::move(axis));
  }
  std::vector<Point> out{Point{}};
  for (const auto& axis : axes) {
    std::vector<Point> next;
    for (const auto& prefix : out)
      for (Complex v : axis) {
        Point p = prefix;
        p.push_back(v);
        next.push_back(std::move(p));
      }
    out = std::move(next);
  }
  return out;
}

CompactSet CompactSet::product(ProductSet set) {
  if (set.factors.empty()) throw DomainError("product set needs factors");
  CompactSet k;
  k.kind = Kind::Product;
  k.factors = std::move(set);
  return k;
}

CompactSet CompactSet::ball(int dim) {
  if (dim < 1) throw DomainError("ball dimension must be positive");
  CompactSet k;
  k.kind = Kind::Ball;
  k.ball_dim = dim;
  return k;
}

std::string CompactSet::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (kind == Kind::Ball) {
    os << "ball(d=" << ball_dim << ")";
    return os.str();
  }
  os << "product(";
  for (std::size_t i = 0; i < factors.factors.size(); ++i) {
    const auto& e = factors.factors[i];
    if (i) os << "x";
    if (e.kind == PlanarCompactum::Kind::Disk)
      os << "disk(" << e.center.real() << ";" << e.center.imag() << ";r=" << e.radius << ")";
    else
      os << "segment(" << e.a << ";" << e.b << ")";
  }
  os << ")";
  return os.str();
}

std::string to_string(Estimator estimator) {
  switch (estimator) {
    case Estimator::Bergman:
      return "bergman";
    case Estimator::OnbSup:
      return "onb_sup";
    case Estimator::BracketLower:
      return "bracket_lower";
    case Estimator::Reference:
      return "reference";
  }
  return "unknown";
}

Estimator estimator_from_string(const std::string& name) {
  if (name == "bergman") return Estimator::Bergman;
  if (name == "onb_sup") return Estimator::OnbSup;
  if (name == "bracket_lower") return Estimator::BracketLower;
  if (name == "reference") return Estimator::Reference;
  throw DomainError("unknown estimator '" + name + "'");
}

FieldResult field_estimate(const Body& body, const MeasureModel& measure, int n, const GridSpec& grid,
                           Estimator estimator) {
  if (estimator == Estimator::Reference) throw DomainError("use field_reference for reference fields");
  if (grid.dim() != body.dim()) throw DomainError("grid and body dimensions differ");

  FieldResult out{grid, grid.points(), {}, estimator, n, body.describe(), measure.describe(), ""};
  out.values.resize(out.points.size());

  const BergmanEvaluator kernel(orthonormal_basis(measure, body, n));
  BMBound bound;
  if (estimator == Estimator::BracketLower) bound = bm_constant(measure, body, n);

  parallel_for(out.points.size(), [&](std::size_t k) {
    const auto& z = out.points[k];
    switch (estimator) {
      case Estimator::Bergman:
        out.values[k] = bergman_log_estimate(kernel, z);
        break;
      case Estimator::OnbSup:
        out.values[k] = onb_sup_estimate(kernel.basis(), z, n);
        break;
      case Estimator::BracketLower:
        out.values[k] = phi_bracket(kernel, z, bound).lower;
        break;
      case Estimator::Reference:
        break;
    }
  });
  return out;
}

FieldResult field_reference(const Body& body, const CompactSet& set, const GridSpec& grid) {
  if (grid.dim() != body.dim() || set.dim() != body.dim())
    throw DomainError("grid, body and K dimensions differ");
  if (set.kind == CompactSet::Kind::Ball && body.kind() != Body::Kind::AxisCross && !body.is_simplex_like())
    throw NoClosedForm("no closed-form extremal function for " + body.describe() + " on the ball");

  FieldResult out{grid, grid.points(), {}, Estimator::Reference, 0, body.describe(), "", set.describe()};
  out.values.resize(out.points.size());
  for (std::size_t k = 0; k < out.points.size(); ++k) {
    const auto& z = out.points[k];
    if (set.kind == CompactSet::Kind::Product)
      out.values[k] = product_extremal(body, set.factors, z);
    else
      out.values[k] = ball_extremal(body.kind() == Body::Kind::AxisCross ? Body::Kind::AxisCross : Body::Kind::Simplex, z);
  }
  return out;
}

ConvergenceEntry field_compare(const FieldResult& estimate, const FieldResult& reference) {
  if (estimate.points != reference.points) throw DomainError("field_compare requires identical grids");
  ConvergenceEntry entry{estimate.n, 0.0, 0.0};
  std::vector<double> errors(estimate.values.size());
  for (std::size_t k = 0; k < errors.size(); ++k) {
    errors[k] = std::abs(estimate.values[k] - reference.values[k]);
    entry.sup_error = std::max(entry.sup_error, errors[k]);
  }
  if (!errors.empty()) entry.mean_abs_error = pairwise_sum(errors) / static_cast<double>(errors.size());
  return entry;
}

std::vector<bool> level_set(const FieldResult& field, double log_r) {
  if (!(log_r >= 0.0)) throw DomainError("level_set requires log R >= 0");
  std::vector<bool> mask(field.values.size());
  for (std::size_t k = 0; k < mask.size(); ++k) mask[k] = field.values[k] < log_r;
  return mask;
}

std::vector<bool> hull_mask(const FieldResult& field, double bracket_width) {
  return level_set(field, 1e-6 + std::max(0.0, bracket_width));
}

std::vector<BallDiagonalRow> ball_diagonal_study(double p, int n, const std::vector<double>& radii, int dim) {
  const Body body = Body::lp_ball(p, dim);
  const BergmanEvaluator kernel(orthonormal_basis(MeasureModel::sphere(dim), body, n));
  std::vector<BallDiagonalRow> rows(radii.size());
  parallel_for(radii.size(), [&](std::size_t k) {
    const double r = radii[k];
    if (!(r > 0.0)) throw DomainError("diagonal radii must be positive");
    const Point z(static_cast<std::size_t>(dim), Complex{r, 0.0});
    BallDiagonalRow row;
    row.r = r;
    row.lower = ball_extremal(Body::Kind::AxisCross, z);
    row.upper = ball_extremal(Body::Kind::Simplex, z);
    row.estimate = bergman_log_estimate(kernel, z);
    row.onb_sup = onb_sup_estimate(kernel.basis(), z, n);
    row.margin_lower = row.estimate - row.lower;
    row.margin_upper = row.upper - row.estimate;
    rows[k] = row;
  });
  return rows;
}

std::vector<EnvelopeRow> triangle_envelope_study(double p, const std::vector<double>& alphas,
                                                 const std::vector<Point>& points, int n,
                                                 const MeasureModel& measure) {
  if (measure.dim != 2) throw DomainError("triangle envelope study is two dimensional");
  if (alphas.empty()) throw DomainError("alpha grid is empty");
  const BergmanEvaluator cp(orthonormal_basis(measure, Body::lp_ball(p, 2), n));
  std::vector<BergmanEvaluator> triangles;
  triangles.reserve(alphas.size());
  for (double alpha : alphas) triangles.emplace_back(orthonormal_basis(measure, Body::tangent_triangle(p, alpha), n));

  std::vector<EnvelopeRow> rows(points.size());
  parallel_for(points.size(), [&](std::size_t k) {
    EnvelopeRow row;
    row.z = points[k];
    row.cp_estimate = bergman_log_estimate(cp, row.z);
    row.envelope = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      const double v = bergman_log_estimate(triangles[a], row.z);
      if (v > row.envelope) {
        row.envelope = v;
        row.best_alpha = alphas[a];
      }
    }
    row.gap = row.cp_estimate - row.envelope;
    rows[k] = std::move(row);
  });
  return rows;
}

StirlingCheck stirling_bound_check(double lambda0) {
  if (!(lambda0 > 0.0 && lambda0 < 0.25)) throw DomainError("stirling_bound_check requires 0 < lambda0 < 1/4");
  const double value = entropy_f(lambda0);
  return {value, value < std::log(2.0)};
}

}  // namespace excc
