#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "excc/body.hpp"
#include "excc/measures.hpp"
#include "excc/planar.hpp"

namespace excc {

/// Polynomial in Poly(nC) stored as monomial coefficients aligned with the
/// ordered lattice of nC.
class PolyC {
 public:
  PolyC(std::shared_ptr<const LatticeBasis> lattice, std::vector<Complex> coefficients);

  const LatticeBasis& lattice() const noexcept { return *lattice_; }
  std::shared_ptr<const LatticeBasis> lattice_ptr() const noexcept { return lattice_; }
  int n() const noexcept { return lattice_->n; }
  int dim() const noexcept { return lattice_->body.dim(); }
  std::span<const Complex> coefficients() const noexcept { return coefficients_; }

  /// Coefficient of z^J (zero when J is outside nC).
  Complex coefficient(const MultiIndex& index) const;

  Complex evaluate(std::span<const Complex> z) const;
  /// Value and gradient at z.
  std::pair<Complex, std::vector<Complex>> evaluate_with_gradient(std::span<const Complex> z) const;

  double coefficient_norm() const;

 private:
  std::shared_ptr<const LatticeBasis> lattice_;
  std::vector<Complex> coefficients_;
};

struct BasisOptions {
  /// Skip the closed-form paths and factor the Gram matrix.
  bool force_generic = false;
  /// Largest n accepted by the Gram factorization in double precision.
  int generic_max_n = 40;
  /// Pivots below rank_tol * (largest Gram diagonal) are rank deficient.
  double rank_tol = 1e-12;
  /// Condition estimates above this are reported in warnings().
  double condition_warning = 1e12;
};

/// Orthonormal polynomials p_1, ..., p_m obtained from the ordered monomials
/// of nC by Gram-Schmidt under a measure. p_j has leading monomial J_j and no
/// later monomials.
class OrthoBasis {
 public:
  /// Monomial: p_j = z^J / ||z^J||. Tensor: products of one-dimensional
  /// orthonormal families (scaled powers or Chebyshev). Dense: Cholesky.
  enum class Method { Monomial, Tensor, Dense };

  const Body& body() const noexcept { return order_->body; }
  int n() const noexcept { return order_->n; }
  const MeasureModel& measure() const noexcept { return measure_; }
  const LatticeBasis& order() const noexcept { return *order_; }
  std::shared_ptr<const LatticeBasis> order_ptr() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_->size(); }
  Method method() const noexcept { return method_; }
  bool diagonal_shortcut() const noexcept { return method_ != Method::Dense; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// p_j(z) for every j.
  std::vector<Complex> values(std::span<const Complex> z) const;
  /// log|p_j(z)| for every j, overflow-free on the closed-form paths.
  std::vector<double> log_abs_values(std::span<const Complex> z) const;

  /// Upper-triangular R with p_j = sum_i R(i, j) z^{J_i}.
  Eigen::MatrixXcd transform() const;
  /// sum_j a_j p_j expressed in monomials.
  PolyC to_monomial(std::span<const Complex> a) const;

 private:
  friend OrthoBasis orthonormal_basis(const MeasureModel&, const Body&, int, const BasisOptions&);

  // One-dimensional orthonormal family for a tensor factor.
  struct AxisFamily {
    bool chebyshev = false;
    double radius = 1.0;  // scaled powers z^k / radius^k
    double a = -1.0;      // Chebyshev on [a, b]
    double b = 1.0;
  };

  std::vector<double> log_axis_values(const AxisFamily& family, Complex x) const;
  std::vector<Complex> axis_values(const AxisFamily& family, Complex x) const;
  std::vector<std::vector<Complex>> axis_monomial_coefficients(const AxisFamily& family) const;

  std::shared_ptr<const LatticeBasis> order_;
  MeasureModel measure_;
  Method method_ = Method::Dense;
  std::vector<double> log_scale_;  // Monomial: log(1 / ||z^J||)
  std::vector<AxisFamily> axes_;   // Tensor
  Eigen::MatrixXcd transform_;     // Dense
  std::vector<std::string> warnings_;
};

/// G(i, j) = <z^{J_i}, z^{J_j}>.
Eigen::MatrixXcd gram(const MeasureModel& measure, const LatticeBasis& lattice);

OrthoBasis orthonormal_basis(const MeasureModel& measure, const Body& body, int n,
                             const BasisOptions& options = {});

/// max |<p_i, p_j> - delta_ij|, re-assembled from monomial inner products.
/// Tensor bases use an exact tensor quadrature instead, since monomial Gram
/// matrices of Chebyshev families lose all precision by n = 20.
double orthonormality_residual(const OrthoBasis& basis);

/// Long-format CSV: basis_index,j_1..j_d,monomial_index,re,im (nonzero entries).
void write_basis_csv(std::ostream& out, const OrthoBasis& basis);

/// Diagonal S_n(z, z) = sum_j |p_j(z)|^2 of the reproducing kernel.
class BergmanEvaluator {
 public:
  explicit BergmanEvaluator(OrthoBasis basis) : basis_(std::move(basis)) {}

  const OrthoBasis& basis() const noexcept { return basis_; }
  /// S_n(z, z); may overflow to +inf for large n and |z|.
  double value(std::span<const Complex> z) const;
  /// log S_n(z, z) by log-sum-exp.
  double log_value(std::span<const Complex> z) const;

 private:
  OrthoBasis basis_;
};

double bergman_value(const BergmanEvaluator& kernel, std::span<const Complex> z);

/// (1 / 2n) log S_n(z, z).
double bergman_log_estimate(const BergmanEvaluator& kernel, std::span<const Complex> z);

/// max of log|p_j(z)| / deg_C(p_j) over basis elements of C-degree at least
/// max(1, min_degree). min_degree = n keeps only the top layer, the finite-n
/// proxy for the limsup over |alpha| -> infinity.
double onb_sup_estimate(const OrthoBasis& basis, std::span<const Complex> z, int min_degree = 1);

struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
};

/// Bracket for (1/n) log Phi_n(z): upper = (1/2n) log S_n,
/// lower = upper - (1/n) log(M_n sqrt(m_n)).
Bracket phi_bracket(const BergmanEvaluator& kernel, std::span<const Complex> z, const BMBound& bound);

/// Stable log(sum exp(t)) over finite and -inf entries.
double log_sum_exp(std::span<const double> terms);

}  // namespace excc
