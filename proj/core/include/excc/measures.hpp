#pragma once

#include <complex>
#include <string>
#include <vector>

#include "excc/body.hpp"
#include "excc/planar.hpp"

namespace excc {

/// Probability measure on a compact set K, described by how it pairs monomials.
struct MeasureModel {
  enum class Kind { TorusHaar, CircleHaar, Arcsine, Product, SphereSurface, DiscreteQuadrature };

  /// Haar measure on the unit torus |z_1| = ... = |z_d| = 1.
  static MeasureModel torus(int dim);
  /// Product of Haar measures on circles |z_j| = radii[j].
  static MeasureModel circle(std::vector<double> radii);
  /// Arcsine (Chebyshev) distribution on the real segment [a, b].
  static MeasureModel arcsine(double a, double b);
  /// Tensor product of one-dimensional models.
  static MeasureModel product(std::vector<MeasureModel> factors);
  /// Normalized surface measure on the unit sphere of C^d.
  static MeasureModel sphere(int dim);
  /// Weighted point masses; weights are normalized to total mass 1.
  static MeasureModel discrete(std::vector<Point> nodes, std::vector<double> weights);

  Kind kind = Kind::TorusHaar;
  int dim = 1;
  std::vector<double> radii;
  double a = -1.0;
  double b = 1.0;
  std::vector<MeasureModel> factors;
  std::vector<Point> nodes;
  std::vector<double> weights;

  /// Distinct monomials are orthogonal (torus, circles, sphere, and products of circles).
  bool monomial_orthogonal() const;
  /// A product of one-dimensional models (torus and circle measures count).
  bool is_tensor() const;
  /// One-dimensional factor for coordinate `axis` of a tensor measure.
  MeasureModel factor(int axis) const;

  std::string describe() const;
};

/// <z^a, z^b> = integral of z^a conj(z^b).
Complex monomial_inner(const MeasureModel& measure, const MultiIndex& a, const MultiIndex& b);

/// log ||z^a||^2 for a monomial-orthogonal measure.
double log_monomial_norm2(const MeasureModel& measure, const MultiIndex& a);

/// Deterministic sample of the support K (used for sup-norm estimates).
std::vector<Point> support_sample(const MeasureModel& measure, std::size_t count);

/// Constant M_n in ||p||_K <= M_n ||p||_tau on Poly(nC).
struct BMBound {
  enum class Provenance { ClosedForm, GridEstimated, Unknown };

  int n = 0;
  double value = 1.0;
  Provenance provenance = Provenance::Unknown;
};

/// Size of the fixed support sample behind grid-estimated bounds.
inline constexpr std::size_t kBMSampleSize = 4096;
inline constexpr double kBMSafetyFactor = 1.05;

BMBound bm_constant(const MeasureModel& measure, const Body& body, int n);

std::string to_string(BMBound::Provenance provenance);

}  // namespace excc
