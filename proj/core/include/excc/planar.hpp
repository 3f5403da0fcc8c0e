#pragma once

#include <complex>
#include <span>
#include <vector>

#include "excc/body.hpp"

namespace excc {

using Complex = std::complex<double>;
using Point = std::vector<Complex>;

/// Closed disk or real segment in the complex plane.
struct PlanarCompactum {
  enum class Kind { Disk, Segment };

  static PlanarCompactum disk(Complex center, double radius);
  static PlanarCompactum segment(double a, double b);

  Kind kind = Kind::Disk;
  Complex center{0.0, 0.0};
  double radius = 1.0;
  double a = -1.0;
  double b = 1.0;

  friend bool operator==(const PlanarCompactum&, const PlanarCompactum&) = default;
};

/// K = E_1 x ... x E_d.
struct ProductSet {
  std::vector<PlanarCompactum> factors;

  static ProductSet unit_polydisk(int dim);
  int dim() const noexcept { return static_cast<int>(factors.size()); }

  friend bool operator==(const ProductSet&, const ProductSet&) = default;
};

/// Green function of E with pole at infinity.
double green(const PlanarCompactum& set, Complex z);

/// Extremal function V_{C,K} of a product of planar compacta:
/// max_j g_j(z_j) for bodies between the axis cross and the simplex, and
/// max(0, beta g_1, alpha g_2) for a triangle.
double product_extremal(const Body& body, const ProductSet& set, std::span<const Complex> z);

/// Closed-form extremal functions of the unit Euclidean ball for the axis
/// cross and the simplex. Other bodies throw NoClosedForm.
double ball_extremal(Body::Kind kind, std::span<const Complex> z);

/// H_C(z) = phi_C(log|z_1|, ..., log|z_d|). Zero coordinates enter as -inf.
double log_indicator(const Body& body, std::span<const Complex> z);

/// Binary entropy in nats: -[(1-x) log(1-x) + x log x].
double entropy_f(double x);

}  // namespace excc
