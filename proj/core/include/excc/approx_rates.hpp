#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "excc/body.hpp"
#include "excc/planar.hpp"

namespace excc {

/// Holomorphic function of one variable given by its expansion coefficients.
/// Taylor expansions live on the closed unit disk (circle Haar measure);
/// Chebyshev expansions f = sum c_k T_k live on [-1, 1] (arcsine measure).
struct AnalyticFunction1D {
  enum class Expansion { Taylor, Chebyshev };

  /// c_k = rho^(k+1), i.e. rho / (1 - rho t) in the Taylor case.
  static AnalyticFunction1D geometric(double rho, Expansion expansion = Expansion::Taylor);
  static AnalyticFunction1D polynomial(std::vector<Complex> coefficients, Expansion expansion = Expansion::Taylor);
  static AnalyticFunction1D zero(Expansion expansion = Expansion::Taylor);

  Expansion expansion = Expansion::Taylor;
  double rate = 0.0;
  std::optional<int> degree;
  std::function<Complex(int)> coefficient;
  std::function<double(int)> log_abs_coefficient;
  std::string name;

  /// ||b_k||^2 for the k-th basis function under the matching measure.
  double basis_norm2(int k) const;
  /// log sqrt(sum_{k>m} |c_k|^2 ||b_k||^2); -inf when the tail vanishes.
  double log_tail(int m) const;
  double tail(int m) const;
  /// sum_{k>m} c_k b_k(x).
  Complex tail_value(int m, Complex x) const;
  Complex value(Complex x) const { return tail_value(-1, x); }
  /// Sampled check that |c_k|^(1/k) is within `tolerance` of `rate`.
  bool rate_consistent(double tolerance = 0.02) const;

 private:
  double geometric_rho_ = 0.0;
  bool closed_form_ = false;
};

struct TwoVarFunction {
  enum class Form { Separable, Diagonal };

  /// F(z, w) = f(z) + g(w).
  static TwoVarFunction separable(AnalyticFunction1D f, AnalyticFunction1D g);
  /// F(z, w) = f(z w); f must be a Taylor expansion.
  static TwoVarFunction diagonal(AnalyticFunction1D f);

  Form form = Form::Separable;
  AnalyticFunction1D f;
  AnalyticFunction1D g;

  Complex value(Complex z, Complex w) const;
  std::string describe() const;
};

/// max{k : k e_axis in nC}.
int axis_extent(const Body& body, int n, int axis);
/// max{k : (k, k) in nC}.
int diagonal_cutoff(const Body& body, int n);
/// sup{s : (s, s) in C}.
double diagonal_ratio(const Body& body);

double log_best_error_separable(const Body& body, int n, const TwoVarFunction& fn);
double log_best_error_diagonal(const Body& body, int n, const TwoVarFunction& fn);
double log_best_error(const Body& body, int n, const TwoVarFunction& fn);
double best_error_separable(const Body& body, int n, const TwoVarFunction& fn);
double best_error_diagonal(const Body& body, int n, const TwoVarFunction& fn);

/// Exact limsup d_n^(1/n) for the given body and function.
double target_rate(const Body& body, const TwoVarFunction& fn);

/// Log of the sup over a sample of K of the L2-best approximation error.
double log_sup_error(const Body& body, int n, const TwoVarFunction& fn, int side = 100);

inline constexpr double kErrorFloor = 1e-300;

struct RateReport {
  std::vector<int> ns;
  std::vector<double> log_errors_l2;
  std::vector<double> log_errors_sup;
  double fitted_l2 = 0.0;
  double fitted_sup = 0.0;
  double target = 0.0;
  std::string target_provenance;
  std::size_t window_start = 0;
  std::string body;
  std::string descriptor;

  std::vector<double> errors_l2() const;
  std::vector<double> errors_sup() const;
};

/// exp(slope) of the least-squares fit of log d_n against n over the upper
/// half of the data. Points below kErrorFloor are dropped.
double fitted_rate(const std::vector<int>& ns, const std::vector<double>& log_errors);
double fitted_rate(const RateReport& report);
std::size_t fit_window_start(std::size_t count);

/// Errors for n = 1..n_max with fitted and exact rates.
RateReport rate_study(const Body& body, const TwoVarFunction& fn, int n_max, bool with_sup = false);

struct NormalizedRow {
  int n = 0;
  int index_ball = 0;
  int index_triangle = 0;
  double log_error_ball = 0.0;
  double log_error_triangle = 0.0;
};

struct NormalizedComparison {
  double p = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double area_ball = 0.0;
  double area_triangle = 0.0;
  std::vector<NormalizedRow> rows;
  double fitted_ball = 0.0;
  double fitted_triangle = 0.0;
  double target_ball = 0.0;
  double target_triangle = 0.0;
  double raw_fitted_ball = 0.0;
  double raw_fitted_triangle = 0.0;
};

/// Compares C_p at index n/A_p with the tangent triangle at index n/A_alpha.
/// The triangle is cut at alpha on the first axis and beta on the second.
NormalizedComparison normalized_compare(double p, double alpha, const TwoVarFunction& fn, int n_max);

struct GammaCheck {
  double p = 0.0;
  double lhs = 0.0;  // Gamma(1 + 2/p)
  double rhs = 0.0;  // 2 Gamma(1 + 1/p)^2
  bool printed_inequality_holds = false;
  double area_triangle = 0.0;  // A for the isosceles tangent triangle
  double area_ball = 0.0;      // A_p
  bool passes = false;         // area_triangle <= area_ball
};

GammaCheck gamma_check(double p);

enum class MinimaxTarget { Product, HalfSum };

struct MinimaxResult {
  int n = 0;
  int grid_count = 0;
  double value = 0.0;
  int iterations = 0;
};

/// min over p, q of degree <= n of max over the grid of |F(x,y) - p(x) - q(y)|.
MinimaxResult minimax_xy(int n, int grid_count = 33, MinimaxTarget target = MinimaxTarget::Product);

struct SupL2Rates {
  double rate_l2 = 0.0;
  double rate_sup = 0.0;
  RateReport report;
};

SupL2Rates sup_vs_l2_rate(const TwoVarFunction& fn, const Body& body, int n_max, int side = 100);

}  // namespace excc
