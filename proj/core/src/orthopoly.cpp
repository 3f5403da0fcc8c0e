#include "excc/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "excc/error.hpp"

namespace excc {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

int max_exponent(const LatticeBasis& lattice) {
  int best = 0;
  for (const auto& j : lattice.indices)
    for (int v : j) best = std::max(best, v);
  return best;
}

// powers[i][k] = z_i^k
std::vector<std::vector<Complex>> power_table(std::span<const Complex> z, int max_power) {
  std::vector<std::vector<Complex>> powers(z.size(), std::vector<Complex>(static_cast<std::size_t>(max_power) + 1));
  for (std::size_t i = 0; i < z.size(); ++i) {
    powers[i][0] = 1.0;
    for (int k = 1; k <= max_power; ++k) powers[i][k] = powers[i][k - 1] * z[i];
  }
  return powers;
}

void require_point(const LatticeBasis& lattice, std::span<const Complex> z) {
  if (z.size() != static_cast<std::size_t>(lattice.body.dim()))
    throw DomainError("point dimension does not match the body");
}

// Coefficients of a polynomial in t re-expressed in x, where t = scale * x + shift.
std::vector<Complex> substitute_affine(const std::vector<double>& in_t, double scale, double shift) {
  std::vector<Complex> out{0.0};
  for (auto it = in_t.rbegin(); it != in_t.rend(); ++it) {
    std::vector<Complex> next(out.size() + 1, 0.0);
    for (std::size_t k = 0; k < out.size(); ++k) {
      next[k + 1] += out[k] * scale;
      next[k] += out[k] * shift;
    }
    next[0] += *it;
    out = std::move(next);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- PolyC

PolyC::PolyC(std::shared_ptr<const LatticeBasis> lattice, std::vector<Complex> coefficients)
    : lattice_(std::move(lattice)), coefficients_(std::move(coefficients)) {
  if (!lattice_) throw DomainError("PolyC needs a lattice");
  if (coefficients_.size() != lattice_->size())
    throw DomainError("PolyC coefficient count does not match the lattice");
}

Complex PolyC::coefficient(const MultiIndex& index) const {
  const auto pos = lattice_->find(index);
  return pos ? coefficients_[*pos] : Complex{};
}

Complex PolyC::evaluate(std::span<const Complex> z) const {
  require_point(*lattice_, z);
  const auto powers = power_table(z, max_exponent(*lattice_));
  Complex total = 0.0;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (coefficients_[k] == Complex{}) continue;
    Complex term = coefficients_[k];
    const auto& j = lattice_->indices[k];
    for (std::size_t i = 0; i < j.size(); ++i) term *= powers[i][j[i]];
    total += term;
  }
  return total;
}

std::pair<Complex, std::vector<Complex>> PolyC::evaluate_with_gradient(std::span<const Complex> z) const {
  require_point(*lattice_, z);
  const auto powers = power_table(z, max_exponent(*lattice_));
  Complex value = 0.0;
  std::vector<Complex> gradient(z.size(), 0.0);
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (coefficients_[k] == Complex{}) continue;
    const auto& j = lattice_->indices[k];
    Complex term = coefficients_[k];
    for (std::size_t i = 0; i < j.size(); ++i) term *= powers[i][j[i]];
    value += term;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (j[i] == 0) continue;
      Complex partial = coefficients_[k] * static_cast<double>(j[i]) * powers[i][j[i] - 1];
      for (std::size_t l = 0; l < j.size(); ++l)
        if (l != i) partial *= powers[l][j[l]];
      gradient[i] += partial;
    }
  }
  return {value, gradient};
}

double PolyC::coefficient_norm() const {
  double s = 0.0;
  for (Complex c : coefficients_) s += std::norm(c);
  return std::sqrt(s);
}

// ----------------------------------------------------------- OrthoBasis

std::vector<Complex> OrthoBasis::axis_values(const AxisFamily& family, Complex x) const {
  const int top = max_exponent(*order_);
  std::vector<Complex> out(static_cast<std::size_t>(top) + 1);
  if (!family.chebyshev) {
    out[0] = 1.0;
    for (int k = 1; k <= top; ++k) out[k] = out[k - 1] * x / family.radius;
    return out;
  }
  const Complex t = (2.0 * x - family.a - family.b) / (family.b - family.a);
  Complex prev = 1.0;
  Complex cur = t;
  out[0] = 1.0;
  for (int k = 1; k <= top; ++k) {
    out[k] = std::sqrt(2.0) * cur;
    const Complex next = 2.0 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return out;
}

std::vector<double> OrthoBasis::log_axis_values(const AxisFamily& family, Complex x) const {
  const int top = max_exponent(*order_);
  std::vector<double> out(static_cast<std::size_t>(top) + 1, 0.0);
  if (!family.chebyshev) {
    const double log_x = x == Complex{} ? kNegInf : std::log(std::abs(x)) - std::log(family.radius);
    for (int k = 1; k <= top; ++k) out[k] = k * log_x;
    return out;
  }
  // T_k(t) = (u^k + u^-k) / 2 with |u| >= 1, so the magnitude never overflows.
  const Complex t = (2.0 * x - family.a - family.b) / (family.b - family.a);
  const Complex root = std::sqrt(t * t - 1.0);
  const Complex u = std::abs(t + root) >= std::abs(t - root) ? t + root : t - root;
  const double log_u = std::log(std::abs(u));
  for (int k = 1; k <= top; ++k) {
    const Complex ratio = std::exp(-2.0 * k * std::log(u));
    const double mag = std::abs(1.0 + ratio);
    out[k] = 0.5 * std::log(2.0) + k * log_u + (mag == 0.0 ? kNegInf : std::log(mag)) - std::log(2.0);
  }
  return out;
}

std::vector<std::vector<Complex>> OrthoBasis::axis_monomial_coefficients(const AxisFamily& family) const {
  const int top = max_exponent(*order_);
  std::vector<std::vector<Complex>> out;
  if (!family.chebyshev) {
    for (int k = 0; k <= top; ++k) {
      std::vector<Complex> c(static_cast<std::size_t>(k) + 1, 0.0);
      c[k] = std::pow(family.radius, -k);
      out.push_back(std::move(c));
    }
    return out;
  }
  const double scale = 2.0 / (family.b - family.a);
  const double shift = -(family.a + family.b) / (family.b - family.a);
  std::vector<double> prev{1.0};
  std::vector<double> cur{0.0, 1.0};
  out.push_back({1.0});
  for (int k = 1; k <= top; ++k) {
    auto c = substitute_affine(cur, scale, shift);
    for (auto& v : c) v *= std::sqrt(2.0);
    out.push_back(std::move(c));
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2.0 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

std::vector<Complex> OrthoBasis::values(std::span<const Complex> z) const {
  require_point(*order_, z);
  const auto& indices = order_->indices;
  std::vector<Complex> out(indices.size());
  switch (method_) {
    case Method::Monomial: {
      const auto powers = power_table(z, max_exponent(*order_));
      for (std::size_t k = 0; k < indices.size(); ++k) {
        Complex v = std::exp(log_scale_[k]);
        for (std::size_t i = 0; i < z.size(); ++i) v *= powers[i][indices[k][i]];
        out[k] = v;
      }
      break;
    }
    case Method::Tensor: {
      std::vector<std::vector<Complex>> axis(z.size());
      for (std::size_t i = 0; i < z.size(); ++i) axis[i] = axis_values(axes_[i], z[i]);
      for (std::size_t k = 0; k < indices.size(); ++k) {
        Complex v = 1.0;
        for (std::size_t i = 0; i < z.size(); ++i) v *= axis[i][indices[k][i]];
        out[k] = v;
      }
      break;
    }
    case Method::Dense: {
      const auto powers = power_table(z, max_exponent(*order_));
      Eigen::VectorXcd mono(static_cast<Eigen::Index>(indices.size()));
      for (std::size_t k = 0; k < indices.size(); ++k) {
        Complex v = 1.0;
        for (std::size_t i = 0; i < z.size(); ++i) v *= powers[i][indices[k][i]];
        mono(static_cast<Eigen::Index>(k)) = v;
      }
      const Eigen::VectorXcd p = transform_.transpose() * mono;
      for (std::size_t k = 0; k < indices.size(); ++k) out[k] = p(static_cast<Eigen::Index>(k));
      break;
    }
  }
  return out;
}

std::vector<double> OrthoBasis::log_abs_values(std::span<const Complex> z) const {
  require_point(*order_, z);
  const auto& indices = order_->indices;
  std::vector<double> out(indices.size());
  switch (method_) {
    case Method::Monomial: {
      std::vector<double> log_z(z.size());
      for (std::size_t i = 0; i < z.size(); ++i) log_z[i] = z[i] == Complex{} ? kNegInf : std::log(std::abs(z[i]));
      for (std::size_t k = 0; k < indices.size(); ++k) {
        double v = log_scale_[k];
        for (std::size_t i = 0; i < z.size(); ++i)
          if (indices[k][i] != 0) v += indices[k][i] * log_z[i];
        out[k] = v;
      }
      break;
    }
    case Method::Tensor: {
      std::vector<std::vector<double>> axis(z.size());
      for (std::size_t i = 0; i < z.size(); ++i) axis[i] = log_axis_values(axes_[i], z[i]);
      for (std::size_t k = 0; k < indices.size(); ++k) {
        double v = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) v += axis[i][indices[k][i]];
        out[k] = v;
      }
      break;
    }
    case Method::Dense: {
      const auto v = values(z);
      for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] == Complex{} ? kNegInf : std::log(std::abs(v[k]));
      break;
    }
  }
  return out;
}

Eigen::MatrixXcd OrthoBasis::transform() const {
  const auto m = static_cast<Eigen::Index>(size());
  switch (method_) {
    case Method::Monomial: {
      Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(m, m);
      for (Eigen::Index k = 0; k < m; ++k) r(k, k) = std::exp(log_scale_[static_cast<std::size_t>(k)]);
      return r;
    }
    case Method::Tensor: {
      Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(m, m);
      std::vector<Complex> unit(size(), 0.0);
      for (Eigen::Index k = 0; k < m; ++k) {
        unit[static_cast<std::size_t>(k)] = 1.0;
        const auto poly = to_monomial(unit);
        for (Eigen::Index i = 0; i < m; ++i) r(i, k) = poly.coefficients()[static_cast<std::size_t>(i)];
        unit[static_cast<std::size_t>(k)] = 0.0;
      }
      return r;
    }
    case Method::Dense:
      return transform_;
  }
  return {};
}

PolyC OrthoBasis::to_monomial(std::span<const Complex> a) const {
  if (a.size() != size()) throw DomainError("coefficient count does not match the basis");
  const auto& indices = order_->indices;
  std::vector<Complex> out(size(), 0.0);
  switch (method_) {
    case Method::Monomial:
      for (std::size_t k = 0; k < size(); ++k) out[k] = a[k] * std::exp(log_scale_[k]);
      break;
    case Method::Dense: {
      Eigen::VectorXcd coeffs(static_cast<Eigen::Index>(size()));
      for (std::size_t k = 0; k < size(); ++k) coeffs(static_cast<Eigen::Index>(k)) = a[k];
      const Eigen::VectorXcd mono = transform_ * coeffs;
      for (std::size_t k = 0; k < size(); ++k) out[k] = mono(static_cast<Eigen::Index>(k));
      break;
    }
    case Method::Tensor: {
      std::map<MultiIndex, std::size_t> position;
      for (std::size_t k = 0; k < size(); ++k) position.emplace(indices[k], k);
      std::vector<std::vector<std::vector<Complex>>> axis;
      for (const auto& family : axes_) axis.push_back(axis_monomial_coefficients(family));

      for (std::size_t k = 0; k < size(); ++k) {
        if (a[k] == Complex{}) continue;
        const auto& j = indices[k];
        // Expand the tensor product over all sub-indices J' <= J.
        MultiIndex sub(j.size(), 0);
        while (true) {
          Complex c = a[k];
          for (std::size_t i = 0; i < j.size(); ++i) c *= axis[i][j[i]][sub[i]];
          if (c != Complex{}) out[position.at(sub)] += c;
          std::size_t i = 0;
          while (i < j.size() && sub[i] == j[i]) sub[i++] = 0;
          if (i == j.size()) break;
          ++sub[i];
        }
      }
      break;
    }
  }
  return PolyC(order_, std::move(out));
}

Eigen::MatrixXcd gram(const MeasureModel& measure, const LatticeBasis& lattice) {
  const auto m = static_cast<Eigen::Index>(lattice.size());
  Eigen::MatrixXcd g(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i; j < m; ++j) {
      const Complex v = monomial_inner(measure, lattice.indices[static_cast<std::size_t>(i)],
                                       lattice.indices[static_cast<std::size_t>(j)]);
      g(i, j) = v;
      g(j, i) = std::conj(v);
    }
  return g;
}

OrthoBasis orthonormal_basis(const MeasureModel& measure, const Body& body, int n, const BasisOptions& options) {
  if (measure.dim != body.dim()) throw DomainError("measure and body dimensions differ");
  if (n < 0) throw DomainError("basis degree must be nonnegative");

  OrthoBasis basis;
  basis.order_ = std::make_shared<const LatticeBasis>(lattice(body, n));
  basis.measure_ = measure;

  if (!options.force_generic && measure.monomial_orthogonal()) {
    basis.method_ = OrthoBasis::Method::Monomial;
    basis.log_scale_.reserve(basis.size());
    for (const auto& j : basis.order_->indices) basis.log_scale_.push_back(-0.5 * log_monomial_norm2(measure, j));
    return basis;
  }
  if (!options.force_generic && measure.is_tensor()) {
    basis.method_ = OrthoBasis::Method::Tensor;
    for (int i = 0; i < measure.dim; ++i) {
      const auto f = measure.factor(i);
      OrthoBasis::AxisFamily family;
      if (f.kind == MeasureModel::Kind::Arcsine) {
        family.chebyshev = true;
        family.a = f.a;
        family.b = f.b;
      } else if (f.kind == MeasureModel::Kind::CircleHaar) {
        family.radius = f.radii[0];
      }
      basis.axes_.push_back(family);
    }
    return basis;
  }

  if (n > options.generic_max_n)
    throw DomainError("Gram factorization is limited to n <= " + std::to_string(options.generic_max_n) +
                      " in double precision");
  basis.method_ = OrthoBasis::Method::Dense;
  const Eigen::MatrixXcd g = gram(measure, *basis.order_);
  const Eigen::Index m = g.rows();

  // Ordered Cholesky G = L L^H without pivoting keeps Gram-Schmidt triangularity.
  const double largest = g.diagonal().real().maxCoeff();
  Eigen::MatrixXcd l = Eigen::MatrixXcd::Zero(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    double pivot = g(j, j).real();
    for (Eigen::Index k = 0; k < j; ++k) pivot -= std::norm(l(j, k));
    if (!(pivot > options.rank_tol * largest)) {
      std::ostringstream os;
      os << "Gram matrix is rank deficient at pivot " << j << " (monomial ";
      for (int v : basis.order_->indices[static_cast<std::size_t>(j)]) os << v << ' ';
      os << "); the measure does not norm Poly(nC)";
      throw RankDeficient(static_cast<std::size_t>(j), os.str());
    }
    l(j, j) = std::sqrt(pivot);
    for (Eigen::Index i = j + 1; i < m; ++i) {
      Complex s = g(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / l(j, j);
    }
  }
  const Eigen::VectorXd diag = l.diagonal().real();
  const double condition = std::pow(diag.maxCoeff() / diag.minCoeff(), 2);
  if (condition > options.condition_warning) {
    std::ostringstream os;
    os << "Gram matrix condition estimate " << condition << " exceeds " << options.condition_warning;
    basis.warnings_.push_back(os.str());
  }
  const Eigen::MatrixXcd l_inv =
      l.triangularView<Eigen::Lower>().solve(Eigen::MatrixXcd::Identity(m, m));
  basis.transform_ = l_inv.transpose();
  return basis;
}

namespace {

// Tensor quadrature exact for products of the basis functions: Gauss-Chebyshev
// nodes on arcsine axes, equispaced nodes on circle axes.
double tensor_residual(const OrthoBasis& basis) {
  const auto& measure = basis.measure();
  const int count = max_exponent(basis.order()) + 1;
  std::vector<std::vector<Complex>> axis_nodes;
  for (int i = 0; i < measure.dim; ++i) {
    const auto f = measure.factor(i);
    std::vector<Complex> nodes(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
      if (f.kind == MeasureModel::Kind::Arcsine) {
        nodes[k] = 0.5 * (f.a + f.b) + 0.5 * (f.b - f.a) * std::cos(std::numbers::pi * (k + 0.5) / count);
      } else {
        const double radius = f.radii.empty() ? 1.0 : f.radii[0];
        nodes[k] = std::polar(radius, 2.0 * std::numbers::pi * k / count);
      }
    }
    axis_nodes.push_back(std::move(nodes));
  }
  const auto m = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd inner = Eigen::MatrixXcd::Zero(m, m);
  std::vector<int> digit(static_cast<std::size_t>(measure.dim), 0);
  Point z(static_cast<std::size_t>(measure.dim));
  const double weight = std::pow(static_cast<double>(count), -measure.dim);
  while (true) {
    for (int i = 0; i < measure.dim; ++i) z[i] = axis_nodes[i][digit[i]];
    const auto v = basis.values(z);
    const Eigen::Map<const Eigen::VectorXcd> col(v.data(), m);
    inner.noalias() += weight * col * col.adjoint();
    int axis = 0;
    while (axis < measure.dim && ++digit[axis] == count) digit[axis++] = 0;
    if (axis == measure.dim) break;
  }
  return (inner - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff();
}

}  // namespace

double orthonormality_residual(const OrthoBasis& basis) {
  if (basis.method() == OrthoBasis::Method::Tensor) return tensor_residual(basis);
  const Eigen::MatrixXcd g = gram(basis.measure(), basis.order());
  const Eigen::MatrixXcd r = basis.transform();
  const Eigen::MatrixXcd inner = r.transpose() * g * r.conjugate();
  const auto m = inner.rows();
  return (inner - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff();
}

void write_basis_csv(std::ostream& out, const OrthoBasis& basis) {
  const int d = basis.body().dim();
  out << "basis_index";
  for (int i = 1; i <= d; ++i) out << ",j_" << i;
  out << ",monomial_index,re,im\n";
  const Eigen::MatrixXcd r = basis.transform();
  const auto precision = out.precision(17);
  for (Eigen::Index k = 0; k < r.cols(); ++k)
    for (Eigen::Index i = 0; i <= k; ++i) {
      if (r(i, k) == Complex{}) continue;
      out << k;
      for (int v : basis.order().indices[static_cast<std::size_t>(k)]) out << ',' << v;
      out << ',' << i << ',' << r(i, k).real() << ',' << r(i, k).imag() << '\n';
    }
  out.precision(precision);
}

// ------------------------------------------------------------- Bergman

double log_sum_exp(std::span<const double> terms) {
  double top = kNegInf;
  for (double t : terms) top = std::max(top, t);
  if (top == kNegInf) return kNegInf;
  double s = 0.0;
  for (double t : terms) s += std::exp(t - top);
  return top + std::log(s);
}

double BergmanEvaluator::value(std::span<const Complex> z) const { return std::exp(log_value(z)); }

double BergmanEvaluator::log_value(std::span<const Complex> z) const {
  auto terms = basis_.log_abs_values(z);
  for (double& t : terms) t *= 2.0;
  return log_sum_exp(terms);
}

double bergman_value(const BergmanEvaluator& kernel, std::span<const Complex> z) { return kernel.value(z); }

double bergman_log_estimate(const BergmanEvaluator& kernel, std::span<const Complex> z) {
  const int n = std::max(1, kernel.basis().n());
  return kernel.log_value(z) / (2.0 * n);
}

double onb_sup_estimate(const OrthoBasis& basis, std::span<const Complex> z, int min_degree) {
  const auto logs = basis.log_abs_values(z);
  const auto& degrees = basis.order().degrees;
  const int floor_degree = std::max(1, min_degree);
  double best = kNegInf;
  for (std::size_t k = 0; k < logs.size(); ++k)
    if (degrees[k] >= floor_degree) best = std::max(best, logs[k] / degrees[k]);
  return best;
}

Bracket phi_bracket(const BergmanEvaluator& kernel, std::span<const Complex> z, const BMBound& bound) {
  if (!std::isfinite(bound.value)) throw DomainError("phi_bracket needs a finite M_n");
  const double n = std::max(1, kernel.basis().n());
  const double upper = bergman_log_estimate(kernel, z);
  const double m = static_cast<double>(kernel.basis().size());
  return {upper - std::log(bound.value * std::sqrt(m)) / n, upper};
}

}  // namespace excc
