#include "excc/approx_rates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <sstream>

#include "excc/error.hpp"
#include "excc/parallel.hpp"
#include "excc/simplex_lp.hpp"

namespace excc {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr int kMaxTailTerms = 200000;

// log(e^a + e^b) in the sense of sqrt(e^{2a} + e^{2b}).
double log_hypot(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + 0.5 * std::log1p(std::exp(2.0 * (lo - hi)));
}

Complex chebyshev_root(Complex x) {
  Complex u = x + std::sqrt(x * x - 1.0);
  if (std::abs(u) < 1.0) u = 1.0 / u;
  return u;
}

Complex chebyshev_t(int k, Complex x) {
  if (x.imag() == 0.0 && std::abs(x.real()) <= 1.0) return {std::cos(k * std::acos(x.real())), 0.0};
  const Complex u = chebyshev_root(x);
  return 0.5 * (std::pow(u, k) + std::pow(u, -k));
}

std::vector<Complex> circle_points(int side) {
  std::vector<Complex> out(static_cast<std::size_t>(side));
  for (int i = 0; i < side; ++i) out[static_cast<std::size_t>(i)] = std::polar(1.0, 2.0 * std::numbers::pi * i / side);
  return out;
}

std::vector<Complex> segment_points(int side) {
  std::vector<Complex> out(static_cast<std::size_t>(side));
  for (int i = 0; i < side; ++i)
    out[static_cast<std::size_t>(i)] = side == 1 ? Complex{0.0} : Complex{std::cos(std::numbers::pi * i / (side - 1)), 0.0};
  return out;
}

void require_planar(const Body& body) {
  if (body.dim() != 2) throw DomainError("rate computations need a planar body (d = 2)");
}

}  // namespace

AnalyticFunction1D AnalyticFunction1D::geometric(double rho, Expansion expansion) {
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError("geometric rate must lie in (0, 1)");
  AnalyticFunction1D fn;
  fn.expansion = expansion;
  fn.rate = rho;
  fn.coefficient = [rho](int k) { return Complex{std::pow(rho, k + 1), 0.0}; };
  fn.log_abs_coefficient = [rho](int k) { return (k + 1) * std::log(rho); };
  std::ostringstream name;
  name << (expansion == Expansion::Taylor ? "taylor" : "chebyshev") << "-geometric(" << rho << ")";
  fn.name = name.str();
  fn.geometric_rho_ = rho;
  fn.closed_form_ = true;
  return fn;
}

AnalyticFunction1D AnalyticFunction1D::polynomial(std::vector<Complex> coefficients, Expansion expansion) {
  while (!coefficients.empty() && coefficients.back() == Complex{}) coefficients.pop_back();
  AnalyticFunction1D fn;
  fn.expansion = expansion;
  fn.rate = 0.0;
  fn.degree = static_cast<int>(coefficients.size()) - 1;
  auto shared = std::make_shared<std::vector<Complex>>(std::move(coefficients));
  fn.coefficient = [shared](int k) {
    return k >= 0 && k < static_cast<int>(shared->size()) ? (*shared)[static_cast<std::size_t>(k)] : Complex{};
  };
  fn.log_abs_coefficient = [shared](int k) {
    if (k < 0 || k >= static_cast<int>(shared->size())) return kNegInf;
    const double mag = std::abs((*shared)[static_cast<std::size_t>(k)]);
    return mag > 0.0 ? std::log(mag) : kNegInf;
  };
  fn.name = "polynomial(deg " + std::to_string(*fn.degree) + ")";
  return fn;
}

AnalyticFunction1D AnalyticFunction1D::zero(Expansion expansion) {
  auto fn = polynomial({}, expansion);
  fn.name = "zero";
  return fn;
}

double AnalyticFunction1D::basis_norm2(int k) const {
  if (expansion == Expansion::Taylor || k == 0) return 1.0;
  return 0.5;
}

double AnalyticFunction1D::log_tail(int m) const {
  if (degree && m >= *degree) return kNegInf;
  if (closed_form_ && m >= 0) {
    // sum_{k>m} rho^{2k+2} = rho^{2m+4} / (1 - rho^2)
    const double rho = geometric_rho_;
    double out = (m + 2) * std::log(rho) - 0.5 * std::log1p(-rho * rho);
    if (expansion == Expansion::Chebyshev) out -= 0.5 * std::log(2.0);
    return out;
  }
  const int last = degree ? *degree : m + kMaxTailTerms;
  double peak = kNegInf;
  double scaled = 0.0;
  int quiet = 0;
  for (int k = std::max(m + 1, 0); k <= last; ++k) {
    const double term = log_abs_coefficient(k) + 0.5 * std::log(basis_norm2(k));
    if (term == kNegInf) continue;
    if (term > peak) {
      scaled = scaled * std::exp(2.0 * (peak - term)) + 1.0;
      peak = term;
      quiet = 0;
    } else {
      scaled += std::exp(2.0 * (term - peak));
      quiet = term < peak - 40.0 ? quiet + 1 : 0;
    }
    if (!degree && quiet >= 32) break;
  }
  if (peak == kNegInf) return kNegInf;
  return peak + 0.5 * std::log(scaled);
}

double AnalyticFunction1D::tail(int m) const { return std::exp(log_tail(m)); }

Complex AnalyticFunction1D::tail_value(int m, Complex x) const {
  if (degree && m >= *degree) return {};
  const int start = std::max(m + 1, 0);
  if (closed_form_) {
    const double rho = geometric_rho_;
    // sum_{k>=start} rho^{k+1} u^k = rho^{start+1} u^start / (1 - rho u)
    auto geometric_sum = [&](Complex u) { return std::pow(rho, start + 1) * std::pow(u, start) / (1.0 - rho * u); };
    if (expansion == Expansion::Taylor) return geometric_sum(x);
    const Complex u = chebyshev_root(x);
    return 0.5 * (geometric_sum(u) + geometric_sum(1.0 / u));
  }
  const int last = degree ? *degree : start + kMaxTailTerms;
  Complex sum{};
  int quiet = 0;
  for (int k = start; k <= last; ++k) {
    const Complex c = coefficient(k);
    if (c == Complex{}) continue;
    const Complex term = c * (expansion == Expansion::Taylor ? std::pow(x, k) : chebyshev_t(k, x));
    sum += term;
    quiet = std::abs(term) <= 1e-18 * std::abs(sum) ? quiet + 1 : 0;
    if (!degree && quiet >= 32) break;
  }
  return sum;
}

bool AnalyticFunction1D::rate_consistent(double tolerance) const {
  if (degree) return true;
  for (int k : {100, 200, 300, 400}) {
    const double root = std::exp(log_abs_coefficient(k) / k);
    if (std::abs(root - rate) > tolerance * rate) return false;
  }
  return true;
}

TwoVarFunction TwoVarFunction::separable(AnalyticFunction1D f, AnalyticFunction1D g) {
  if (f.expansion != g.expansion) throw DomainError("separable factors must use the same expansion");
  TwoVarFunction fn;
  fn.form = Form::Separable;
  fn.f = std::move(f);
  fn.g = std::move(g);
  return fn;
}

TwoVarFunction TwoVarFunction::diagonal(AnalyticFunction1D f) {
  if (f.expansion != AnalyticFunction1D::Expansion::Taylor) throw DomainError("diagonal functions need a Taylor expansion");
  TwoVarFunction fn;
  fn.form = Form::Diagonal;
  fn.f = std::move(f);
  fn.g = AnalyticFunction1D::zero();
  return fn;
}

Complex TwoVarFunction::value(Complex z, Complex w) const {
  if (form == Form::Diagonal) return f.value(z * w);
  return f.value(z) + g.value(w);
}

std::string TwoVarFunction::describe() const {
  if (form == Form::Diagonal) return "diagonal f(zw), f=" + f.name;
  return "separable f(z)+g(w), f=" + f.name + ", g=" + g.name;
}

int axis_extent(const Body& body, int n, int axis) {
  MultiIndex index(static_cast<std::size_t>(body.dim()), 0);
  int k = 0;
  while (true) {
    index[static_cast<std::size_t>(axis)] = k + 1;
    if (!contains_scaled(body, index, n)) return k;
    ++k;
  }
}

int diagonal_cutoff(const Body& body, int n) {
  require_planar(body);
  int k = 0;
  while (contains_scaled(body, MultiIndex{k + 1, k + 1}, n)) ++k;
  return k;
}

double diagonal_ratio(const Body& body) {
  require_planar(body);
  switch (body.kind()) {
    case Body::Kind::LpBall:
      return std::pow(0.5, 1.0 / body.p());
    case Body::Kind::Simplex:
      return 0.5;
    case Body::Kind::Triangle:
      return body.alpha() * body.beta() / (body.alpha() + body.beta());
    case Body::Kind::AxisCross:
      return 0.0;
  }
  return 0.0;
}

double log_best_error_separable(const Body& body, int n, const TwoVarFunction& fn) {
  require_planar(body);
  if (fn.form != TwoVarFunction::Form::Separable) throw DomainError("expected a separable function");
  if (fn.f.expansion != fn.g.expansion) throw DomainError("unsupported body/measure pairing");
  return log_hypot(fn.f.log_tail(axis_extent(body, n, 0)), fn.g.log_tail(axis_extent(body, n, 1)));
}

double log_best_error_diagonal(const Body& body, int n, const TwoVarFunction& fn) {
  require_planar(body);
  if (fn.form != TwoVarFunction::Form::Diagonal) throw DomainError("expected a diagonal function");
  return fn.f.log_tail(diagonal_cutoff(body, n));
}

double log_best_error(const Body& body, int n, const TwoVarFunction& fn) {
  return fn.form == TwoVarFunction::Form::Separable ? log_best_error_separable(body, n, fn)
                                                    : log_best_error_diagonal(body, n, fn);
}

double best_error_separable(const Body& body, int n, const TwoVarFunction& fn) {
  return std::exp(log_best_error_separable(body, n, fn));
}

double best_error_diagonal(const Body& body, int n, const TwoVarFunction& fn) {
  return std::exp(log_best_error_diagonal(body, n, fn));
}

double target_rate(const Body& body, const TwoVarFunction& fn) {
  require_planar(body);
  if (fn.form == TwoVarFunction::Form::Diagonal) return std::pow(fn.f.rate, diagonal_ratio(body));
  return std::max(std::pow(fn.f.rate, body.axis_cut(0)), std::pow(fn.g.rate, body.axis_cut(1)));
}

double log_sup_error(const Body& body, int n, const TwoVarFunction& fn, int side) {
  require_planar(body);
  const bool taylor = fn.f.expansion == AnalyticFunction1D::Expansion::Taylor;
  const auto points = taylor ? circle_points(side) : segment_points(side);
  double best = 0.0;
  if (fn.form == TwoVarFunction::Form::Diagonal) {
    const int cut = diagonal_cutoff(body, n);
    for (const auto& z : points)
      for (const auto& w : points) best = std::max(best, std::abs(fn.f.tail_value(cut, z * w)));
  } else {
    const int cut_f = axis_extent(body, n, 0);
    const int cut_g = axis_extent(body, n, 1);
    std::vector<Complex> tf, tg;
    for (const auto& z : points) {
      tf.push_back(fn.f.tail_value(cut_f, z));
      tg.push_back(fn.g.tail_value(cut_g, z));
    }
    for (const auto& a : tf)
      for (const auto& b : tg) best = std::max(best, std::abs(a + b));
  }
  return best > 0.0 ? std::log(best) : kNegInf;
}

std::vector<double> RateReport::errors_l2() const {
  std::vector<double> out;
  for (double v : log_errors_l2) out.push_back(std::exp(v));
  return out;
}

std::vector<double> RateReport::errors_sup() const {
  std::vector<double> out;
  for (double v : log_errors_sup) out.push_back(std::exp(v));
  return out;
}

std::size_t fit_window_start(std::size_t count) { return count / 2; }

double fitted_rate(const std::vector<int>& ns, const std::vector<double>& log_errors) {
  if (ns.size() != log_errors.size()) throw DomainError("fit inputs differ in length");
  if (ns.size() < 8) throw DomainError("rate fit needs at least 8 points");
  const double floor = std::log(kErrorFloor);
  std::vector<double> xs, ys;
  for (std::size_t i = fit_window_start(ns.size()); i < ns.size(); ++i) {
    if (!(log_errors[i] >= floor)) continue;
    xs.push_back(ns[i]);
    ys.push_back(log_errors[i]);
  }
  if (xs.size() < 2) throw NumericalError("degenerate fit: errors below the 1e-300 floor");
  const double count = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw NumericalError("degenerate fit: a single n value");
  return std::exp(sxy / sxx);
}

double fitted_rate(const RateReport& report) { return fitted_rate(report.ns, report.log_errors_l2); }

RateReport rate_study(const Body& body, const TwoVarFunction& fn, int n_max, bool with_sup) {
  require_planar(body);
  if (n_max < 1) throw DomainError("n_max must be positive");
  RateReport report;
  report.body = body.describe();
  report.descriptor = fn.describe();
  for (int n = 1; n <= n_max; ++n) report.ns.push_back(n);
  const std::size_t count = report.ns.size();
  report.log_errors_l2.assign(count, 0.0);
  if (with_sup) report.log_errors_sup.assign(count, 0.0);
  parallel_for(count, [&](std::size_t i) {
    report.log_errors_l2[i] = log_best_error(body, report.ns[i], fn);
    if (with_sup) report.log_errors_sup[i] = log_sup_error(body, report.ns[i], fn);
  });
  report.window_start = fit_window_start(count);
  report.target = target_rate(body, fn);
  report.target_provenance = fn.form == TwoVarFunction::Form::Diagonal ? "r^(diagonal ratio of C)"
                                                                       : "max(rho_f^(x cut), rho_g^(y cut))";
  if (count >= 8) {
    report.fitted_l2 = fitted_rate(report.ns, report.log_errors_l2);
    if (with_sup) report.fitted_sup = fitted_rate(report.ns, report.log_errors_sup);
  }
  return report;
}

NormalizedComparison normalized_compare(double p, double alpha, const TwoVarFunction& fn, int n_max) {
  NormalizedComparison out;
  out.p = p;
  out.alpha = alpha;
  out.beta = tangent_beta(p, alpha);
  const Body ball = Body::lp_ball(p, 2);
  const Body triangle = Body::triangle_from_cuts(alpha, out.beta);
  out.area_ball = area_sqrt(ball);
  out.area_triangle = area_sqrt(triangle);

  out.rows.resize(static_cast<std::size_t>(n_max));
  parallel_for(out.rows.size(), [&](std::size_t i) {
    NormalizedRow& row = out.rows[i];
    row.n = static_cast<int>(i) + 1;
    row.index_ball = static_cast<int>(std::floor(row.n / out.area_ball));
    row.index_triangle = static_cast<int>(std::floor(row.n / out.area_triangle));
    row.log_error_ball = log_best_error(ball, row.index_ball, fn);
    row.log_error_triangle = log_best_error(triangle, row.index_triangle, fn);
  });

  std::vector<int> ns;
  std::vector<double> eb, et;
  for (const auto& row : out.rows) {
    ns.push_back(row.n);
    eb.push_back(row.log_error_ball);
    et.push_back(row.log_error_triangle);
  }
  out.fitted_ball = fitted_rate(ns, eb);
  out.fitted_triangle = fitted_rate(ns, et);
  out.target_ball = std::pow(target_rate(ball, fn), 1.0 / out.area_ball);
  out.target_triangle = std::pow(target_rate(triangle, fn), 1.0 / out.area_triangle);
  out.raw_fitted_ball = fitted_rate(rate_study(ball, fn, n_max));
  out.raw_fitted_triangle = fitted_rate(rate_study(triangle, fn, n_max));
  return out;
}

GammaCheck gamma_check(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("gamma_check needs 0 < p <= 1");
  GammaCheck out;
  out.p = p;
  out.lhs = std::tgamma(1.0 + 2.0 / p);
  const double g = std::tgamma(1.0 + 1.0 / p);
  out.rhs = 2.0 * g * g;
  const double log_lhs = std::lgamma(1.0 + 2.0 / p);
  const double log_rhs = std::log(2.0) + 2.0 * std::lgamma(1.0 + 1.0 / p);
  out.printed_inequality_holds = log_lhs <= log_rhs + 1e-12;
  const double a = isosceles_alpha(p);
  out.area_triangle = a / std::sqrt(2.0);  // sqrt(a * a / 2)
  out.area_ball = area_sqrt(Body::lp_ball(p, 2));
  out.passes = out.area_triangle <= out.area_ball * (1.0 + 1e-12);
  return out;
}

MinimaxResult minimax_xy(int n, int grid_count, MinimaxTarget target) {
  if (n < 0) throw DomainError("degree must be nonnegative");
  if (grid_count < 2) throw DomainError("grid needs at least two points per axis");
  // Unknowns: p_0..p_n, q_1..q_n (shifted Chebyshev coefficients), t.
  const int unknowns = 2 * n + 2;
  const int t_col = unknowns - 1;
  std::vector<double> nodes(static_cast<std::size_t>(grid_count));
  for (int i = 0; i < grid_count; ++i) nodes[static_cast<std::size_t>(i)] = static_cast<double>(i) / (grid_count - 1);

  Eigen::MatrixXd basis(grid_count, n + 1);
  for (int i = 0; i < grid_count; ++i)
    for (int k = 0; k <= n; ++k)
      basis(i, k) = std::cos(k * std::acos(std::clamp(2.0 * nodes[static_cast<std::size_t>(i)] - 1.0, -1.0, 1.0)));

  const Eigen::Index rows = 2 * static_cast<Eigen::Index>(grid_count) * grid_count;
  InequalityLp lp;
  lp.a = Eigen::MatrixXd::Zero(rows, unknowns);
  lp.b = Eigen::VectorXd::Zero(rows);
  lp.c = Eigen::VectorXd::Zero(unknowns);
  lp.c(t_col) = 1.0;
  Eigen::Index r = 0;
  for (int i = 0; i < grid_count; ++i) {
    for (int j = 0; j < grid_count; ++j) {
      const double x = nodes[static_cast<std::size_t>(i)];
      const double y = nodes[static_cast<std::size_t>(j)];
      const double value = target == MinimaxTarget::Product ? x * y : 0.5 * (x + y);
      Eigen::RowVectorXd approx = Eigen::RowVectorXd::Zero(unknowns);
      for (int k = 0; k <= n; ++k) approx(k) = basis(i, k);
      for (int k = 1; k <= n; ++k) approx(n + k) = basis(j, k);
      // value - approx <= t and approx - value <= t
      lp.a.row(r) = -approx;
      lp.a(r, t_col) = -1.0;
      lp.b(r++) = -value;
      lp.a.row(r) = approx;
      lp.a(r, t_col) = -1.0;
      lp.b(r++) = value;
    }
  }
  const LpSolution solution = solve_lp(lp);
  return {n, grid_count, solution.value, solution.iterations};
}

SupL2Rates sup_vs_l2_rate(const TwoVarFunction& fn, const Body& body, int n_max, int side) {
  SupL2Rates out;
  out.report = rate_study(body, fn, n_max, false);
  out.report.log_errors_sup.assign(out.report.ns.size(), 0.0);
  parallel_for(out.report.ns.size(), [&](std::size_t i) {
    out.report.log_errors_sup[i] = log_sup_error(body, out.report.ns[i], fn, side);
  });
  out.report.fitted_sup = fitted_rate(out.report.ns, out.report.log_errors_sup);
  out.rate_l2 = out.report.fitted_l2;
  out.rate_sup = out.report.fitted_sup;
  return out;
}

}  // namespace excc
