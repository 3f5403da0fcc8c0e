#include "excc/body.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "excc/error.hpp"

namespace excc {
namespace {

// Boundary lattice points such as (n, 0) must test as members.
constexpr double kMembershipTol = 1e-9;

void require_dim(const Body& body, std::size_t size) {
  if (size != static_cast<std::size_t>(body.dim()))
    throw DomainError("index length " + std::to_string(size) + " does not match body dimension " +
                      std::to_string(body.dim()));
}

// Value g(J) such that J lies in nC iff g(J) <= n (up to tolerance).
double gauge(const Body& body, std::span<const double> x) {
  switch (body.kind()) {
    case Body::Kind::Simplex:
      return std::accumulate(x.begin(), x.end(), 0.0);
    case Body::Kind::LpBall: {
      double s = 0.0;
      for (double v : x) s += std::pow(v, body.p());
      return std::pow(s, 1.0 / body.p());
    }
    case Body::Kind::Triangle:
      return x[0] / body.beta() + x[1] / body.alpha();
    case Body::Kind::AxisCross:
      break;
  }
  return 0.0;
}

void enumerate(const Body& body, int n, std::size_t axis, MultiIndex& current,
               std::vector<MultiIndex>& out) {
  if (axis == current.size()) {
    out.push_back(current);
    return;
  }
  for (int j = 0; j <= n; ++j) {
    current[axis] = j;
    // Remaining coordinates are still zero, and membership is monotone in
    // every coordinate, so the first failure ends this axis.
    if (!contains_scaled(body, current, n)) break;
    enumerate(body, n, axis + 1, current, out);
  }
  current[axis] = 0;
}

}  // namespace

Body Body::lp_ball(double p, int dim) {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("LpBall requires 0 < p <= 1");
  if (dim < 1) throw DomainError("body dimension must be positive");
  return Body(Kind::LpBall, dim, p, 1.0, 1.0);
}

Body Body::simplex(int dim) {
  if (dim < 1) throw DomainError("body dimension must be positive");
  return Body(Kind::Simplex, dim, 1.0, 1.0, 1.0);
}

Body Body::axis_cross(int dim) {
  if (dim < 1) throw DomainError("body dimension must be positive");
  return Body(Kind::AxisCross, dim, 0.0, 1.0, 1.0);
}

Body Body::triangle(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha < 1.0 && beta > 0.0 && beta < 1.0))
    throw DomainError("Triangle requires 0 < alpha, beta < 1");
  return Body(Kind::Triangle, 2, 0.0, alpha, beta);
}

Body Body::tangent_triangle(double p, double alpha) { return triangle(alpha, tangent_beta(p, alpha)); }

bool Body::is_simplex_like() const noexcept {
  return kind_ == Kind::Simplex || (kind_ == Kind::LpBall && p_ == 1.0);
}

double Body::axis_cut(int axis) const {
  if (axis < 0 || axis >= dim_) throw DomainError("axis out of range");
  if (kind_ != Kind::Triangle) return 1.0;
  return axis == 0 ? beta_ : alpha_;
}

std::string Body::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case Kind::LpBall:
      os << "lp(p=" << p_ << ",d=" << dim_ << ")";
      break;
    case Kind::Simplex:
      os << "simplex(d=" << dim_ << ")";
      break;
    case Kind::AxisCross:
      os << "cross(d=" << dim_ << ")";
      break;
    case Kind::Triangle:
      os << "triangle(alpha=" << alpha_ << ",beta=" << beta_ << ")";
      break;
  }
  return os.str();
}

std::optional<std::size_t> LatticeBasis::find(const MultiIndex& index) const {
  auto it = std::find(indices.begin(), indices.end(), index);
  if (it == indices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - indices.begin());
}

bool precedes(const MultiIndex& a, int deg_a, const MultiIndex& b, int deg_b) {
  if (deg_a != deg_b) return deg_a < deg_b;
  const int total_a = std::accumulate(a.begin(), a.end(), 0);
  const int total_b = std::accumulate(b.begin(), b.end(), 0);
  if (total_a != total_b) return total_a < total_b;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

bool contains_scaled(const Body& body, std::span<const double> point, int n) {
  require_dim(body, point.size());
  if (n < 0) throw DomainError("dilation must be nonnegative");
  if (std::any_of(point.begin(), point.end(), [](double v) { return v < 0.0; })) return false;
  const double dn = static_cast<double>(n);
  switch (body.kind()) {
    case Body::Kind::AxisCross: {
      int nonzero = 0;
      double largest = 0.0;
      for (double v : point) {
        if (v != 0.0) ++nonzero;
        largest = std::max(largest, v);
      }
      return nonzero <= 1 && largest <= dn * (1.0 + kMembershipTol);
    }
    case Body::Kind::LpBall:
    case Body::Kind::Simplex: {
      const double p = body.p();
      double s = 0.0;
      for (double v : point) s += std::pow(v, p);
      return s <= std::pow(dn, p) * (1.0 + kMembershipTol);
    }
    case Body::Kind::Triangle:
      return gauge(body, point) <= dn * (1.0 + kMembershipTol);
  }
  return false;
}

bool contains_scaled(const Body& body, const MultiIndex& index, int n) {
  std::vector<double> point(index.begin(), index.end());
  return contains_scaled(body, std::span<const double>(point), n);
}

LatticeBasis lattice(const Body& body, int n) {
  if (n < 0) throw DomainError("lattice degree must be nonnegative");
  LatticeBasis out{body, n, {}, {}};
  MultiIndex current(static_cast<std::size_t>(body.dim()), 0);
  enumerate(body, n, 0, current, out.indices);

  std::vector<int> degrees;
  degrees.reserve(out.indices.size());
  for (const auto& j : out.indices) degrees.push_back(*c_degree(body, j));

  std::vector<std::size_t> order(out.indices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return precedes(out.indices[a], degrees[a], out.indices[b], degrees[b]);
  });
  std::vector<MultiIndex> sorted;
  sorted.reserve(order.size());
  out.degrees.reserve(order.size());
  for (std::size_t k : order) {
    sorted.push_back(std::move(out.indices[k]));
    out.degrees.push_back(degrees[k]);
  }
  out.indices = std::move(sorted);
  return out;
}

std::optional<int> c_degree(const Body& body, const MultiIndex& index) {
  require_dim(body, index.size());
  if (std::any_of(index.begin(), index.end(), [](int v) { return v < 0; }))
    throw DomainError("multi-index entries must be nonnegative");
  if (std::all_of(index.begin(), index.end(), [](int v) { return v == 0; })) return 0;

  if (body.kind() == Body::Kind::AxisCross) {
    const auto nonzero = std::count_if(index.begin(), index.end(), [](int v) { return v != 0; });
    if (nonzero > 1) return std::nullopt;
    return *std::max_element(index.begin(), index.end());
  }

  std::vector<double> point(index.begin(), index.end());
  int guess = std::max(1, static_cast<int>(std::ceil(gauge(body, point))));
  // Settle the guess against the membership test so both always agree.
  while (guess > 1 && contains_scaled(body, index, guess - 1)) --guess;
  while (!contains_scaled(body, index, guess)) ++guess;
  return guess;
}

double tangent_beta(double p, double alpha) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("tangent_beta requires 0 < p < 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("tangent_beta requires 0 < alpha < 1");
  const double q = p / (1.0 - p);
  return std::pow(1.0 - std::pow(alpha, q), 1.0 / q);
}

double isosceles_alpha(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("isosceles_alpha requires 0 < p <= 1");
  return std::pow(0.5, 1.0 / p - 1.0);
}

double area_sqrt(const Body& body) {
  switch (body.kind()) {
    case Body::Kind::AxisCross:
      throw DomainError("the axis cross has zero area");
    case Body::Kind::Triangle:
      return std::sqrt(body.alpha() * body.beta() / 2.0);
    case Body::Kind::LpBall:
    case Body::Kind::Simplex: {
      if (body.dim() != 2) throw DomainError("area_sqrt is defined for planar bodies only");
      const double p = body.p();
      const double log_area = std::lgamma(1.0 / p) + std::lgamma(1.0 + 1.0 / p) - std::log(p) -
                              std::lgamma(1.0 + 2.0 / p);
      return std::exp(0.5 * log_area);
    }
  }
  return 0.0;
}

double indicator_phi(const Body& body, std::span<const double> x) {
  require_dim(body, x.size());
  if (body.kind() == Body::Kind::Triangle)
    return std::max({0.0, body.beta() * x[0], body.alpha() * x[1]});
  // co(C_p) is the simplex for every p <= 1, and co(C_0) as well.
  double best = 0.0;
  for (double v : x) best = std::max(best, v);
  return best;
}

SandwichConstants sandwich_constants(const Body& body) {
  switch (body.kind()) {
    case Body::Kind::AxisCross:
      return {0.0, 1.0, true};
    case Body::Kind::Triangle:
      return {std::min(body.alpha(), body.beta()), 1.0, false};
    case Body::Kind::LpBall:
    case Body::Kind::Simplex:
      // The simplex vertex constraint is binding on the diagonal (t, ..., t).
      return {std::pow(static_cast<double>(body.dim()), 1.0 - 1.0 / body.p()), 1.0, false};
  }
  return {};
}

}  // namespace excc
