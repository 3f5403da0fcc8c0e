#include "excc/random_ensembles.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "excc/error.hpp"
#include "excc/parallel.hpp"

namespace excc {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

Complex horner(const std::vector<Complex>& c, Complex x, Complex* derivative = nullptr) {
  Complex value{}, slope{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    slope = slope * x + value;
    value = value * x + *it;
  }
  if (derivative) *derivative = slope;
  return value;
}

double quantile(std::vector<double> sorted, double level) {
  const double pos = level * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

CoefficientLaw CoefficientLaw::uniform_disk(double radius) {
  if (!(radius > 0.0)) throw DomainError("uniform disk radius must be positive");
  CoefficientLaw law;
  law.kind = Kind::UniformDisk;
  law.radius = radius;
  return law;
}

Complex CoefficientLaw::draw(CounterRng& rng) const {
  return kind == Kind::ComplexGaussian ? rng.complex_gaussian() : rng.uniform_disk(radius);
}

double CoefficientLaw::density_bound() const {
  if (kind == Kind::ComplexGaussian) return 1.0 / std::numbers::pi;
  return 1.0 / (std::numbers::pi * radius * radius);
}

double CoefficientLaw::tail_mass(double r) const {
  if (kind == Kind::ComplexGaussian) return std::exp(-r * r);
  return r >= radius ? 0.0 : 1.0 - (r * r) / (radius * radius);
}

bool CoefficientLaw::tail_hypothesis_holds(double r) const { return tail_mass(r) <= density_bound() / (r * r); }

std::string CoefficientLaw::describe() const {
  if (kind == Kind::ComplexGaussian) return "complex-gaussian";
  std::ostringstream out;
  out << "uniform-disk(" << radius << ")";
  return out.str();
}

std::vector<Complex> sample_coefficients(const EnsembleConfig& cfg, int sample) {
  if (!cfg.basis) throw DomainError("ensemble needs a basis");
  if (sample < 0 || sample >= cfg.samples) throw DomainError("sample index out of range");
  std::vector<Complex> a(cfg.basis->size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    auto rng = CounterRng::keyed(cfg.seed, cfg.basis->n(), sample, j);
    a[j] = cfg.law.draw(rng);
  }
  return a;
}

PolyC sample_polynomial(const EnsembleConfig& cfg, int sample) {
  const auto a = sample_coefficients(cfg, sample);
  return cfg.basis->to_monomial(a);
}

std::vector<double> potential_field(const PolyC& h, const std::vector<Point>& points) {
  const double n = std::max(h.n(), 1);
  std::vector<double> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double mag = std::abs(h.evaluate(points[i]));
    out[i] = mag > 0.0 ? std::log(mag) / n : kNegInf;
  }
  return out;
}

std::vector<double> potential_field(const OrthoBasis& basis, std::span<const Complex> coefficients,
                                    const std::vector<Point>& points) {
  if (coefficients.size() != basis.size()) throw DomainError("coefficient count does not match the basis");
  const double n = std::max(basis.n(), 1);
  std::vector<double> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto values = basis.values(points[i]);
    Complex total{};
    for (std::size_t j = 0; j < values.size(); ++j) total += coefficients[j] * values[j];
    const double mag = std::abs(total);
    out[i] = mag > 0.0 ? std::log(mag) / n : kNegInf;
  }
  return out;
}

EnsembleField ensemble_mean_field(const EnsembleConfig& cfg) {
  if (!cfg.basis) throw DomainError("ensemble needs a basis");
  if (cfg.samples < 1) throw DomainError("ensemble needs at least one sample");
  cfg.grid.validate();
  EnsembleField out;
  out.points = cfg.grid.points();
  out.n = cfg.basis->n();
  out.samples = cfg.samples;
  out.hypothesis_class = hypothesis_class(cfg.basis->measure());

  std::vector<std::vector<double>> fields(static_cast<std::size_t>(cfg.samples));
  parallel_for(fields.size(), [&](std::size_t i) {
    const auto a = sample_coefficients(cfg, static_cast<int>(i));
    fields[i] = potential_field(*cfg.basis, a, out.points);
  });

  const std::size_t count = out.points.size();
  out.mean.assign(count, 0.0);
  out.stddev.assign(count, 0.0);
  std::vector<double> column(fields.size());
  for (std::size_t p = 0; p < count; ++p) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      double v = fields[i][p];
      if (!(v >= kLogZeroSentinel)) {
        v = kLogZeroSentinel;
        ++out.clipped;
      }
      column[i] = v;
    }
    const double mean = pairwise_sum(column) / static_cast<double>(column.size());
    out.mean[p] = mean;
    if (column.size() > 1) {
      std::vector<double> sq(column.size());
      for (std::size_t i = 0; i < column.size(); ++i) sq[i] = (column[i] - mean) * (column[i] - mean);
      out.stddev[p] = std::sqrt(pairwise_sum(sq) / static_cast<double>(column.size() - 1));
    }
  }
  return out;
}

std::vector<Complex> slice_coefficients(const PolyC& h, int free_axis, const Point& fixed) {
  const int d = h.dim();
  if (free_axis < 0 || free_axis >= d) throw DomainError("free axis out of range");
  if (static_cast<int>(fixed.size()) != d) throw DomainError("slice point has the wrong dimension");
  const auto& lattice = h.lattice();
  std::vector<Complex> c;
  const auto coefficients = h.coefficients();
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    if (coefficients[k] == Complex{}) continue;
    const auto& index = lattice.indices[k];
    Complex term = coefficients[k];
    for (int i = 0; i < d; ++i)
      if (i != free_axis) term *= std::pow(fixed[static_cast<std::size_t>(i)], index[static_cast<std::size_t>(i)]);
    const auto power = static_cast<std::size_t>(index[static_cast<std::size_t>(free_axis)]);
    if (c.size() <= power) c.resize(power + 1);
    c[power] += term;
  }
  return c;
}

std::vector<Complex> slice_zeros(const PolyC& h, int free_axis, const Point& fixed) {
  auto c = slice_coefficients(h, free_axis, fixed);
  double largest = 0.0;
  for (const auto& v : c) largest = std::max(largest, std::abs(v));
  if (largest == 0.0) throw DomainError("restriction is the zero polynomial");
  while (std::abs(c.back()) <= 1e-14 * largest) c.pop_back();
  const auto degree = static_cast<Eigen::Index>(c.size()) - 1;
  if (degree == 0) return {};

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
  for (Eigen::Index i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < degree; ++i) companion(i, degree - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw NumericalError("companion eigenvalues did not converge");

  std::vector<Complex> roots(static_cast<std::size_t>(degree));
  for (Eigen::Index i = 0; i < degree; ++i) {
    Complex x = solver.eigenvalues()(i);
    for (int step = 0; step < 3; ++step) {
      Complex slope;
      const Complex value = horner(c, x, &slope);
      if (slope == Complex{}) break;
      const Complex next = x - value / slope;
      if (std::abs(horner(c, next)) >= std::abs(value)) break;
      x = next;
    }
    roots[static_cast<std::size_t>(i)] = x;
  }
  return roots;
}

double angular_ks(const std::vector<Complex>& roots) {
  if (roots.empty()) throw DomainError("no roots");
  std::vector<double> u(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    double angle = std::arg(roots[i]);
    if (angle < 0.0) angle += 2.0 * std::numbers::pi;
    u[i] = std::clamp(angle / (2.0 * std::numbers::pi), 0.0, 1.0);
  }
  std::sort(u.begin(), u.end());
  const double count = static_cast<double>(u.size());
  double d = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    d = std::max(d, static_cast<double>(i + 1) / count - u[i]);
    d = std::max(d, u[i] - static_cast<double>(i) / count);
  }
  return std::clamp(d, 0.0, 1.0);
}

ZeroStats zero_statistics(const std::vector<Complex>& roots) {
  if (roots.size() < 100) throw DomainError("zero statistics need at least 100 roots");
  ZeroStats out;
  out.count = roots.size();
  std::vector<double> logs(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double mag = std::abs(roots[i]);
    if (mag > 0.0) {
      logs[i] = std::max(std::log(mag), kLogZeroSentinel);
    } else {
      logs[i] = kLogZeroSentinel;
      ++out.clipped;
    }
  }
  out.mean_log_abs = pairwise_sum(logs) / static_cast<double>(logs.size());
  std::sort(logs.begin(), logs.end());
  out.quantile_levels = {0.1, 0.25, 0.5, 0.75, 0.9};
  for (double level : out.quantile_levels) out.log_abs_quantiles.push_back(quantile(logs, level));
  out.ks_angle = angular_ks(roots);
  return out;
}

std::vector<Point> common_zeros_newton(const PolyC& h1, const PolyC& h2, int starts, std::uint64_t seed) {
  if (h1.dim() != 2 || h2.dim() != 2) throw DomainError("common zeros need d = 2");
  if (starts < 1) throw DomainError("need at least one start");

  std::vector<std::optional<Point>> found(static_cast<std::size_t>(starts));
  parallel_for(found.size(), [&](std::size_t s) {
    auto rng = CounterRng::keyed(seed, s);
    Point z{rng.uniform_disk(2.0), rng.uniform_disk(2.0)};
    auto residual = [&](const Point& p) { return std::abs(h1.evaluate(p)) + std::abs(h2.evaluate(p)); };
    double current = residual(z);
    for (int iter = 0; iter < 200; ++iter) {
      if (current < 1e-10) {
        found[s] = z;
        return;
      }
      const auto [v1, g1] = h1.evaluate_with_gradient(z);
      const auto [v2, g2] = h2.evaluate_with_gradient(z);
      const Complex det = g1[0] * g2[1] - g1[1] * g2[0];
      const double scale = (std::abs(g1[0]) + std::abs(g1[1])) * (std::abs(g2[0]) + std::abs(g2[1]));
      if (!(std::abs(det) > 1e-14 * scale)) return;  // singular Jacobian
      const Complex dz = (g2[1] * v1 - g1[1] * v2) / det;
      const Complex dw = (g1[0] * v2 - g2[0] * v1) / det;
      double t = 1.0;
      bool improved = false;
      while (t > 1e-6) {
        Point next{z[0] - t * dz, z[1] - t * dw};
        const double r = residual(next);
        if (r < current) {
          z = std::move(next);
          current = r;
          improved = true;
          break;
        }
        t *= 0.5;
      }
      if (!improved || std::abs(z[0]) > 1e6 || std::abs(z[1]) > 1e6) return;
    }
    if (current < 1e-10) found[s] = z;
  });

  std::vector<Point> out;
  for (const auto& candidate : found) {
    if (!candidate) continue;
    const bool duplicate = std::any_of(out.begin(), out.end(), [&](const Point& p) {
      return std::abs(p[0] - (*candidate)[0]) < 1e-8 && std::abs(p[1] - (*candidate)[1]) < 1e-8;
    });
    if (!duplicate) out.push_back(*candidate);
  }
  return out;
}

std::string hypothesis_class(const MeasureModel& measure) {
  if (measure.is_tensor()) return "product";
  if (measure.kind == MeasureModel::Kind::SphereSurface) return "non-product (ball); regularity hypotheses unverified";
  return "non-product; regularity hypotheses unverified";
}

}  // namespace excc
