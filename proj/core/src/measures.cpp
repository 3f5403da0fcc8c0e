#include "excc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "excc/error.hpp"
#include "excc/orthopoly.hpp"
#include "excc/rng.hpp"

namespace excc {
namespace {

void require_dim(const MeasureModel& m, const MultiIndex& a) {
  if (a.size() != static_cast<std::size_t>(m.dim))
    throw DomainError("multi-index length does not match measure dimension");
}

// E[x^k] for the arcsine law on [a, b]. Uses E[t^(2i)] = binom(2i, i) / 4^i on
// [-1, 1], which is the exact Chebyshev moment identity.
double arcsine_moment(double a, double b, int k) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double total = 0.0;
  for (int i = 0; i <= k; i += 2) {
    const double log_t_moment = std::lgamma(i + 1.0) - 2.0 * std::lgamma(i / 2 + 1.0) - i * std::log(2.0);
    const double log_binom = std::lgamma(k + 1.0) - std::lgamma(i + 1.0) - std::lgamma(k - i + 1.0);
    double term = std::exp(log_binom + log_t_moment) * std::pow(half, i);
    if (k - i > 0) term *= std::pow(center, k - i);
    total += term;
  }
  return total;
}

Complex one_dim_inner(const MeasureModel& m, int j, int k) {
  switch (m.kind) {
    case MeasureModel::Kind::TorusHaar:
      return j == k ? 1.0 : 0.0;
    case MeasureModel::Kind::CircleHaar:
      return j == k ? std::pow(m.radii[0], 2.0 * j) : 0.0;
    case MeasureModel::Kind::Arcsine:
      return arcsine_moment(m.a, m.b, j + k);
    default:
      return monomial_inner(m, MultiIndex{j}, MultiIndex{k});
  }
}

std::vector<Point> cartesian(const std::vector<std::vector<Complex>>& axes) {
  std::vector<Point> out{Point{}};
  for (const auto& axis : axes) {
    std::vector<Point> next;
    next.reserve(out.size() * axis.size());
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

std::vector<Complex> one_dim_sample(const MeasureModel& m, std::size_t count) {
  std::vector<Complex> out;
  out.reserve(count);
  if (m.kind == MeasureModel::Kind::Arcsine) {
    // Chebyshev extreme points, endpoints included.
    for (std::size_t j = 0; j < count; ++j) {
      const double t = count == 1 ? 0.0 : std::cos(std::numbers::pi * j / (count - 1.0));
      out.emplace_back(0.5 * (m.a + m.b) + 0.5 * (m.b - m.a) * t, 0.0);
    }
    return out;
  }
  const double radius = m.kind == MeasureModel::Kind::CircleHaar ? m.radii[0] : 1.0;
  for (std::size_t j = 0; j < count; ++j)
    out.push_back(std::polar(radius, 2.0 * std::numbers::pi * j / static_cast<double>(count)));
  return out;
}

std::size_t per_axis(std::size_t count, int dim) {
  const auto k = static_cast<std::size_t>(std::lround(std::pow(static_cast<double>(count), 1.0 / dim)));
  return std::max<std::size_t>(2, k);
}

}  // namespace

MeasureModel MeasureModel::torus(int dim) {
  if (dim < 1) throw DomainError("torus dimension must be positive");
  MeasureModel m;
  m.kind = Kind::TorusHaar;
  m.dim = dim;
  return m;
}

MeasureModel MeasureModel::circle(std::vector<double> radii) {
  if (radii.empty()) throw DomainError("circle measure needs at least one radius");
  if (std::any_of(radii.begin(), radii.end(), [](double r) { return !(r > 0.0); }))
    throw DomainError("circle radii must be positive");
  MeasureModel m;
  m.kind = Kind::CircleHaar;
  m.dim = static_cast<int>(radii.size());
  m.radii = std::move(radii);
  return m;
}

MeasureModel MeasureModel::arcsine(double a, double b) {
  if (!(a < b)) throw DomainError("arcsine measure requires a < b");
  MeasureModel m;
  m.kind = Kind::Arcsine;
  m.dim = 1;
  m.a = a;
  m.b = b;
  return m;
}

MeasureModel MeasureModel::product(std::vector<MeasureModel> factors) {
  if (factors.empty()) throw DomainError("product measure needs factors");
  for (const auto& f : factors)
    if (f.dim != 1 || !f.is_tensor()) throw DomainError("product factors must be one-dimensional");
  MeasureModel m;
  m.kind = Kind::Product;
  m.dim = static_cast<int>(factors.size());
  m.factors = std::move(factors);
  return m;
}

MeasureModel MeasureModel::sphere(int dim) {
  if (dim < 1) throw DomainError("sphere dimension must be positive");
  MeasureModel m;
  m.kind = Kind::SphereSurface;
  m.dim = dim;
  return m;
}

MeasureModel MeasureModel::discrete(std::vector<Point> nodes, std::vector<double> weights) {
  if (nodes.empty() || nodes.size() != weights.size())
    throw DomainError("discrete measure needs one weight per node");
  const std::size_t dim = nodes.front().size();
  if (dim == 0) throw DomainError("discrete nodes must have positive dimension");
  for (const auto& node : nodes)
    if (node.size() != dim) throw DomainError("discrete nodes have inconsistent dimension");
  if (std::any_of(weights.begin(), weights.end(), [](double w) { return !(w > 0.0); }))
    throw DomainError("discrete weights must be positive");
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) w /= total;

  MeasureModel m;
  m.kind = Kind::DiscreteQuadrature;
  m.dim = static_cast<int>(dim);
  m.nodes = std::move(nodes);
  m.weights = std::move(weights);
  return m;
}

bool MeasureModel::monomial_orthogonal() const {
  switch (kind) {
    case Kind::TorusHaar:
    case Kind::CircleHaar:
    case Kind::SphereSurface:
      return true;
    case Kind::Product:
      return std::all_of(factors.begin(), factors.end(),
                         [](const MeasureModel& f) { return f.monomial_orthogonal(); });
    default:
      return false;
  }
}

bool MeasureModel::is_tensor() const {
  switch (kind) {
    case Kind::TorusHaar:
    case Kind::CircleHaar:
    case Kind::Arcsine:
    case Kind::Product:
      return true;
    default:
      return false;
  }
}

MeasureModel MeasureModel::factor(int axis) const {
  if (axis < 0 || axis >= dim) throw DomainError("factor axis out of range");
  switch (kind) {
    case Kind::TorusHaar:
      return torus(1);
    case Kind::CircleHaar:
      return circle({radii[static_cast<std::size_t>(axis)]});
    case Kind::Arcsine:
      return *this;
    case Kind::Product:
      return factors[static_cast<std::size_t>(axis)];
    default:
      throw DomainError("measure is not a tensor product");
  }
}

std::string MeasureModel::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind) {
    case Kind::TorusHaar:
      os << "torus(d=" << dim << ")";
      break;
    case Kind::CircleHaar:
      os << "circle(r=";
      for (std::size_t i = 0; i < radii.size(); ++i) os << (i ? ";" : "") << radii[i];
      os << ")";
      break;
    case Kind::Arcsine:
      os << "arcsine(a=" << a << ",b=" << b << ")";
      break;
    case Kind::Product:
      os << "product(";
      for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "x" : "") << factors[i].describe();
      os << ")";
      break;
    case Kind::SphereSurface:
      os << "sphere(d=" << dim << ")";
      break;
    case Kind::DiscreteQuadrature:
      os << "discrete(nodes=" << nodes.size() << ",d=" << dim << ")";
      break;
  }
  return os.str();
}

Complex monomial_inner(const MeasureModel& measure, const MultiIndex& a, const MultiIndex& b) {
  require_dim(measure, a);
  require_dim(measure, b);
  switch (measure.kind) {
    case MeasureModel::Kind::TorusHaar:
      return a == b ? 1.0 : 0.0;
    case MeasureModel::Kind::CircleHaar:
    case MeasureModel::Kind::SphereSurface:
      return a == b ? std::exp(log_monomial_norm2(measure, a)) : 0.0;
    case MeasureModel::Kind::Arcsine:
      return arcsine_moment(measure.a, measure.b, a[0] + b[0]);
    case MeasureModel::Kind::Product: {
      Complex total = 1.0;
      for (std::size_t i = 0; i < a.size(); ++i) total *= one_dim_inner(measure.factors[i], a[i], b[i]);
      return total;
    }
    case MeasureModel::Kind::DiscreteQuadrature: {
      Complex total = 0.0;
      for (std::size_t k = 0; k < measure.nodes.size(); ++k) {
        Complex term = measure.weights[k];
        for (std::size_t i = 0; i < a.size(); ++i) {
          const Complex z = measure.nodes[k][i];
          term *= std::pow(z, a[i]) * std::conj(std::pow(z, b[i]));
        }
        total += term;
      }
      return total;
    }
  }
  return 0.0;
}

double log_monomial_norm2(const MeasureModel& measure, const MultiIndex& a) {
  require_dim(measure, a);
  switch (measure.kind) {
    case MeasureModel::Kind::TorusHaar:
      return 0.0;
    case MeasureModel::Kind::CircleHaar: {
      double total = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) total += 2.0 * a[i] * std::log(measure.radii[i]);
      return total;
    }
    case MeasureModel::Kind::SphereSurface: {
      // (d-1)! a! / (d-1+|a|)!
      double total = std::lgamma(static_cast<double>(measure.dim));
      int degree = 0;
      for (int v : a) {
        total += std::lgamma(v + 1.0);
        degree += v;
      }
      return total - std::lgamma(static_cast<double>(measure.dim + degree));
    }
    case MeasureModel::Kind::Product: {
      double total = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i)
        total += log_monomial_norm2(measure.factors[i], MultiIndex{a[i]});
      return total;
    }
    default:
      throw DomainError("monomials are not orthogonal for " + measure.describe());
  }
}

std::vector<Point> support_sample(const MeasureModel& measure, std::size_t count) {
  switch (measure.kind) {
    case MeasureModel::Kind::DiscreteQuadrature:
      return measure.nodes;
    case MeasureModel::Kind::SphereSurface: {
      if (measure.dim == 1) return cartesian({one_dim_sample(MeasureModel::torus(1), count)});
      if (measure.dim == 2) {
        // |z_1|^2 on a uniform grid including both axes, times a phase grid.
        const std::size_t q = per_axis(count, 3);
        std::vector<Point> out;
        out.reserve(q * q * q);
        for (std::size_t i = 0; i < q; ++i) {
          const double s = static_cast<double>(i) / static_cast<double>(q - 1);
          for (std::size_t j = 0; j < q; ++j)
            for (std::size_t k = 0; k < q; ++k)
              out.push_back({std::polar(std::sqrt(s), 2.0 * std::numbers::pi * j / q),
                             std::polar(std::sqrt(1.0 - s), 2.0 * std::numbers::pi * k / q)});
        }
        return out;
      }
      std::vector<Point> out;
      out.reserve(count);
      for (std::size_t k = 0; k < count; ++k) {
        auto rng = CounterRng::keyed(0x5eedULL, measure.dim, k);
        Point p(static_cast<std::size_t>(measure.dim));
        double norm2 = 0.0;
        for (auto& v : p) {
          v = rng.complex_gaussian();
          norm2 += std::norm(v);
        }
        for (auto& v : p) v /= std::sqrt(norm2);
        out.push_back(std::move(p));
      }
      return out;
    }
    default: {
      const std::size_t k = per_axis(count, measure.dim);
      std::vector<std::vector<Complex>> axes;
      for (int i = 0; i < measure.dim; ++i) axes.push_back(one_dim_sample(measure.factor(i), k));
      return cartesian(axes);
    }
  }
}

BMBound bm_constant(const MeasureModel& measure, const Body& body, int n) {
  if (n < 0) throw DomainError("bm_constant requires n >= 0");
  if (measure.is_tensor() && measure.monomial_orthogonal()) {
    // Coefficient Cauchy-Schwarz: sup |p| <= l1 <= sqrt(m_n) * l2.
    const auto m = lattice(body, n).size();
    return {n, std::sqrt(static_cast<double>(m)), BMBound::Provenance::ClosedForm};
  }
  // ||p||_K <= sup_K sqrt(S_n) ||p||_tau is sharp; estimate the sup on a sample.
  const BergmanEvaluator kernel(orthonormal_basis(measure, body, n));
  double best = 1.0;
  for (const auto& z : support_sample(measure, kBMSampleSize))
    best = std::max(best, std::exp(0.5 * kernel.log_value(z)));
  return {n, std::max(1.0, kBMSafetyFactor * best), BMBound::Provenance::GridEstimated};
}

std::string to_string(BMBound::Provenance provenance) {
  switch (provenance) {
    case BMBound::Provenance::ClosedForm:
      return "closed-form";
    case BMBound::Provenance::GridEstimated:
      return "grid-estimated";
    case BMBound::Provenance::Unknown:
      break;
  }
  return "unknown";
}

}  // namespace excc
