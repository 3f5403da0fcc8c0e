#include "excc/planar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "excc/error.hpp"

namespace excc {

PlanarCompactum PlanarCompactum::disk(Complex center, double radius) {
  if (!(radius > 0.0)) throw DomainError("disk radius must be positive");
  PlanarCompactum e;
  e.kind = Kind::Disk;
  e.center = center;
  e.radius = radius;
  return e;
}

PlanarCompactum PlanarCompactum::segment(double a, double b) {
  if (!(a < b)) throw DomainError("segment requires a < b");
  PlanarCompactum e;
  e.kind = Kind::Segment;
  e.a = a;
  e.b = b;
  return e;
}

ProductSet ProductSet::unit_polydisk(int dim) {
  if (dim < 1) throw DomainError("product set needs at least one factor");
  return ProductSet{std::vector<PlanarCompactum>(static_cast<std::size_t>(dim),
                                                 PlanarCompactum::disk({0.0, 0.0}, 1.0))};
}

double green(const PlanarCompactum& set, Complex z) {
  if (set.kind == PlanarCompactum::Kind::Disk)
    return std::max(0.0, std::log(std::abs(z - set.center) / set.radius));

  // Joukowski inverse; the branch with modulus >= 1 keeps the value nonnegative.
  const Complex w = (2.0 * z - set.a - set.b) / (set.b - set.a);
  const Complex root = std::sqrt(w * w - 1.0);
  const double modulus = std::max(std::abs(w + root), std::abs(w - root));
  return std::max(0.0, std::log(modulus));
}

double product_extremal(const Body& body, const ProductSet& set, std::span<const Complex> z) {
  if (set.dim() != body.dim() || z.size() != set.factors.size())
    throw DomainError("product_extremal: dimension mismatch");
  std::vector<double> g(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) g[j] = green(set.factors[j], z[j]);
  // phi_C evaluated on the factor Greens; all nonnegative.
  return indicator_phi(body, g);
}

double ball_extremal(Body::Kind kind, std::span<const Complex> z) {
  switch (kind) {
    case Body::Kind::AxisCross: {
      double best = 0.0;
      for (Complex v : z) best = std::max(best, std::log(std::abs(v)));
      return best;
    }
    case Body::Kind::Simplex: {
      double norm2 = 0.0;
      for (Complex v : z) norm2 += std::norm(v);
      return 0.5 * std::max(0.0, std::log(norm2));
    }
    default:
      throw NoClosedForm("no closed-form extremal function of the ball for this body");
  }
}

double log_indicator(const Body& body, std::span<const Complex> z) {
  std::vector<double> logs(z.size());
  for (std::size_t j = 0; j < z.size(); ++j)
    logs[j] = z[j] == Complex{} ? -std::numeric_limits<double>::infinity() : std::log(std::abs(z[j]));
  return indicator_phi(body, logs);
}

double entropy_f(double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("entropy_f requires 0 < x < 1");
  return -((1.0 - x) * std::log1p(-x) + x * std::log(x));
}

}  // namespace excc
