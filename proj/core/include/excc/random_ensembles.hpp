#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "excc/extremal_lab.hpp"
#include "excc/orthopoly.hpp"
#include "excc/rng.hpp"

namespace excc {

struct CoefficientLaw {
  enum class Kind { ComplexGaussian, UniformDisk };

  static CoefficientLaw gaussian() { return {}; }
  static CoefficientLaw uniform_disk(double radius);

  Kind kind = Kind::ComplexGaussian;
  double radius = 1.0;

  Complex draw(CounterRng& rng) const;
  /// Sup of the density (T in the boundedness hypothesis).
  double density_bound() const;
  /// Mass outside the disk of radius r.
  double tail_mass(double r) const;
  /// tail_mass(r) <= density_bound() / r^2.
  bool tail_hypothesis_holds(double r) const;
  std::string describe() const;
};

struct EnsembleConfig {
  std::shared_ptr<const OrthoBasis> basis;
  CoefficientLaw law;
  int samples = 1;
  std::uint64_t seed = 0;
  GridSpec grid;
};

/// Coefficients a_1..a_m of sample i, keyed by (seed, n, i, j).
std::vector<Complex> sample_coefficients(const EnsembleConfig& cfg, int sample);
/// sum_j a_j p_j in monomial form.
PolyC sample_polynomial(const EnsembleConfig& cfg, int sample);

/// Log of an exact zero in field statistics.
inline constexpr double kLogZeroSentinel = -1e3;

/// (1/n) log|H(z)|; -inf at exact zeros.
std::vector<double> potential_field(const PolyC& h, const std::vector<Point>& points);
/// Same, evaluated through the orthonormal basis (stable for non-monomial bases).
std::vector<double> potential_field(const OrthoBasis& basis, std::span<const Complex> coefficients,
                                    const std::vector<Point>& points);

struct EnsembleField {
  std::vector<Point> points;
  std::vector<double> mean;
  std::vector<double> stddev;
  std::size_t clipped = 0;
  int n = 0;
  int samples = 0;
  std::string hypothesis_class;
};

/// Pointwise mean and standard deviation of (1/n) log|H_n| over the samples.
EnsembleField ensemble_mean_field(const EnsembleConfig& cfg);

/// Roots in the free coordinate with the others held at `fixed`
/// (fixed[free_axis] is ignored).
std::vector<Complex> slice_zeros(const PolyC& h, int free_axis, const Point& fixed);

/// Coefficients (constant term first) of the restriction used by slice_zeros.
std::vector<Complex> slice_coefficients(const PolyC& h, int free_axis, const Point& fixed);

struct ZeroStats {
  std::size_t count = 0;
  std::size_t clipped = 0;
  double mean_log_abs = 0.0;
  std::vector<double> quantile_levels;
  std::vector<double> log_abs_quantiles;
  double ks_angle = 0.0;
};

ZeroStats zero_statistics(const std::vector<Complex>& roots);

/// Kolmogorov-Smirnov distance of the root arguments from the uniform law.
double angular_ks(const std::vector<Complex>& roots);

/// Common zeros of two polynomials in C^2 by damped Newton from random
/// starts in the polydisk of radius 2; deduplicated at 1e-8.
std::vector<Point> common_zeros_newton(const PolyC& h1, const PolyC& h2, int starts, std::uint64_t seed);

/// Which hypotheses cover this measure: "product" when K is a product of
/// planar sets, otherwise the continuity assumptions are unverified.
std::string hypothesis_class(const MeasureModel& measure);

}  // namespace excc
