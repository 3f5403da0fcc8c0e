#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace excc {

/// Exponent vector J = (j_1, ..., j_d) of the monomial z^J.
using MultiIndex = std::vector<int>;

/// Index body C inside the positive orthant.
///
/// All supported bodies sit inside the unit simplex and (except the axis
/// cross) contain a scaled copy of it. Triangles are two dimensional and are
/// stored by their intercepts: vertices (0,0), (beta,0), (0,alpha).
class Body {
 public:
  enum class Kind { LpBall, AxisCross, Triangle, Simplex };

  static Body lp_ball(double p, int dim);
  static Body simplex(int dim);
  static Body axis_cross(int dim);
  /// Triangle with y-intercept `alpha` and x-intercept `beta`.
  static Body triangle(double alpha, double beta);
  /// Triangle through (0, alpha) whose hypotenuse is tangent to x^p + y^p = 1.
  static Body tangent_triangle(double p, double alpha);
  /// Triangle described by where it cuts the first and second axis.
  static Body triangle_from_cuts(double x_cut, double y_cut) { return triangle(y_cut, x_cut); }

  Kind kind() const noexcept { return kind_; }
  int dim() const noexcept { return dim_; }
  /// Exponent p of an l^p ball (1 for the simplex).
  double p() const noexcept { return p_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  bool is_degenerate() const noexcept { return kind_ == Kind::AxisCross; }
  /// Simplex or LpBall(1).
  bool is_simplex_like() const noexcept;
  /// Length of C along coordinate axis `axis` (1 except for triangles).
  double axis_cut(int axis) const;

  std::string describe() const;

  friend bool operator==(const Body&, const Body&) = default;

 private:
  Body(Kind kind, int dim, double p, double alpha, double beta)
      : kind_(kind), dim_(dim), p_(p), alpha_(alpha), beta_(beta) {}

  Kind kind_;
  int dim_;
  double p_;
  double alpha_;
  double beta_;
};

/// Lattice points of nC ordered by the degree-respecting order: C-degree,
/// then total degree, then lexicographic with the first coordinate largest
/// first, so (1,0) precedes (0,1).
struct LatticeBasis {
  Body body;
  int n = 0;
  std::vector<MultiIndex> indices;
  std::vector<int> degrees;

  std::size_t size() const noexcept { return indices.size(); }
  /// Position of `index` in the ordering, if present.
  std::optional<std::size_t> find(const MultiIndex& index) const;
};

/// Strict comparison used to order a LatticeBasis.
bool precedes(const MultiIndex& a, int deg_a, const MultiIndex& b, int deg_b);

bool contains_scaled(const Body& body, std::span<const double> point, int n);
bool contains_scaled(const Body& body, const MultiIndex& index, int n);

LatticeBasis lattice(const Body& body, int n);

/// Smallest n with index in nC; 0 for the zero index; nullopt when no
/// dilation contains the index (mixed index for the axis cross).
std::optional<int> c_degree(const Body& body, const MultiIndex& index);

/// x-intercept of the tangent from (0, alpha) to x^p + y^p = 1.
double tangent_beta(double p, double alpha);

/// The alpha for which the tangent triangle is isosceles: (1/2)^(1/p - 1).
double isosceles_alpha(double p);

/// Square root of the planar area of C (d = 2, LpBall or Triangle).
double area_sqrt(const Body& body);

/// Support function of the convex hull of C.
double indicator_phi(const Body& body, std::span<const double> x);

struct SandwichConstants {
  double epsilon = 0.0;
  double delta = 1.0;
  bool degenerate = false;
};

/// epsilon * Sigma  inside  C  inside  delta * Sigma.
SandwichConstants sandwich_constants(const Body& body);

}  // namespace excc
