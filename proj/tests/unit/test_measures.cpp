#include <doctest.h>

#include <cmath>
#include <numbers>

#include <excc/error.hpp>
#include <excc/measures.hpp>
#include <excc/orthopoly.hpp>
#include <excc/rng.hpp>

using namespace excc;

namespace {

// E[x^k] under the arcsine law on [a, b] by Gauss-Chebyshev quadrature,
// exact for k < 2 * nodes.
double arcsine_moment(double a, double b, int k) {
  const int nodes = 256;
  double sum = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double x = 0.5 * (a + b) + 0.5 * (b - a) * std::cos(std::numbers::pi * (i + 0.5) / nodes);
    sum += std::pow(x, k);
  }
  return sum / nodes;
}

double factorial(int k) { return std::tgamma(k + 1.0); }

}  // namespace

TEST_SUITE("measures") {
  TEST_CASE("monomial_inner examples") {
    const auto sphere = MeasureModel::sphere(2);
    CHECK(monomial_inner(sphere, {2, 3}, {2, 3}).real() == doctest::Approx(1.0 / 60));
    CHECK(std::abs(monomial_inner(MeasureModel::torus(2), {1, 0}, {0, 1})) == 0.0);
    CHECK(monomial_inner(sphere, {1, 0}, {1, 0}).real() == doctest::Approx(0.5));
    CHECK(std::abs(monomial_inner(MeasureModel::arcsine(-1, 1), {0}, {1})) < 1e-15);
    CHECK_THROWS_AS(monomial_inner(sphere, {1}, {1}), DomainError);
  }

  TEST_CASE("normalization") {
    std::vector<MeasureModel> models{
        MeasureModel::torus(3), MeasureModel::circle({0.5, 2.0}), MeasureModel::arcsine(0, 3),
        MeasureModel::sphere(3),
        MeasureModel::product({MeasureModel::arcsine(-1, 1), MeasureModel::circle({2.0})}),
        MeasureModel::discrete({{Complex{1, 0}}, {Complex{0, 2}}}, {3.0, 1.0})};
    for (const auto& m : models) {
      const MultiIndex zero(static_cast<std::size_t>(m.dim), 0);
      CHECK(monomial_inner(m, zero, zero).real() == doctest::Approx(1.0).epsilon(1e-14));
    }
  }

  TEST_CASE("circle and discrete inner products") {
    const auto circle = MeasureModel::circle({0.5, 2.0});
    CHECK(monomial_inner(circle, {2, 1}, {2, 1}).real() == doctest::Approx(std::pow(0.5, 4) * 4.0));
    const auto disc = MeasureModel::discrete({{Complex{1, 1}}, {Complex{0, 2}}}, {1.0, 3.0});
    const Complex expected = 0.25 * std::pow(Complex{1, 1}, 2) * std::conj(Complex{1, 1}) +
                             0.75 * std::pow(Complex{0, 2}, 2) * std::conj(Complex{0, 2});
    const Complex got = monomial_inner(disc, {2}, {1});
    CHECK(std::abs(got - expected) < 1e-14);
  }

  TEST_CASE("arcsine moments against Gauss-Chebyshev quadrature") {
    for (auto [a, b] : {std::pair{-1.0, 1.0}, std::pair{0.0, 2.0}, std::pair{-0.5, 3.0}}) {
      const auto m = MeasureModel::arcsine(a, b);
      for (int j = 0; j <= 12; ++j)
        for (int k = 0; k <= 12; ++k) {
          const double oracle = arcsine_moment(a, b, j + k);
          CHECK(monomial_inner(m, {j}, {k}).real() == doctest::Approx(oracle).epsilon(1e-11).scale(1.0));
        }
    }
    const auto prod = MeasureModel::product({MeasureModel::arcsine(-1, 1), MeasureModel::arcsine(0, 2)});
    CHECK(monomial_inner(prod, {2, 1}, {0, 1}).real() ==
          doctest::Approx(arcsine_moment(-1, 1, 2) * arcsine_moment(0, 2, 2)));
  }

  TEST_CASE("sphere moments") {
    for (int d : {2, 3, 4}) {
      const auto s = MeasureModel::sphere(d);
      for (int k = 0; k < 30; ++k) {
        MultiIndex a(static_cast<std::size_t>(d), 0), b(static_cast<std::size_t>(d), 0);
        a[0] = k;
        b[0] = k + 1;
        const double ak = monomial_inner(s, a, a).real();
        const double ak1 = monomial_inner(s, b, b).real();
        CHECK(ak1 / ak == doctest::Approx((k + 1.0) / (d + k)).epsilon(1e-13));
        CHECK(ak == doctest::Approx(factorial(d - 1) * factorial(k) / factorial(d - 1 + k)).epsilon(1e-12));
      }
    }
    CHECK(log_monomial_norm2(MeasureModel::sphere(2), {2, 3}) == doctest::Approx(std::log(1.0 / 60)));
  }

  TEST_CASE("gram is Hermitian and discrete grams are positive definite") {
    const auto lat = lattice(Body::simplex(2), 4);
    std::vector<Point> nodes;
    auto rng = CounterRng::keyed(3);
    for (std::size_t i = 0; i < lat.size(); ++i) nodes.push_back({rng.complex_gaussian(), rng.complex_gaussian()});
    const auto disc = MeasureModel::discrete(nodes, std::vector<double>(nodes.size(), 1.0));
    const auto g = gram(disc, lat);
    CHECK((g - g.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(g);
    CHECK(eig.eigenvalues().minCoeff() > 0.0);

    const auto sphere_g = gram(MeasureModel::sphere(2), lattice(Body::simplex(2), 1));
    CHECK(sphere_g.real().diagonal()(0) == doctest::Approx(1.0));
    CHECK(sphere_g.real().diagonal()(1) == doctest::Approx(0.5));
    CHECK(sphere_g.real().diagonal()(2) == doctest::Approx(0.5));
    CHECK(std::abs(sphere_g(0, 1)) == 0.0);

    const auto torus_g = gram(MeasureModel::torus(2), lattice(Body::lp_ball(0.5, 2), 5));
    CHECK(torus_g.isIdentity(0.0));

    const auto single = MeasureModel::discrete({{Complex{1, 0}, Complex{0.5, 0}}}, {1.0});
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> rank1(gram(single, lat));
    int nonzero = 0;
    for (auto v : rank1.eigenvalues()) nonzero += std::abs(v) > 1e-12;
    CHECK(nonzero == 1);
  }

  TEST_CASE("bm_constant") {
    const auto torus = bm_constant(MeasureModel::torus(2), Body::simplex(2), 3);
    CHECK(torus.value == doctest::Approx(std::sqrt(10.0)));
    CHECK(torus.provenance == BMBound::Provenance::ClosedForm);
    const auto circle = bm_constant(MeasureModel::circle({1.0}), Body::simplex(1), 5);
    CHECK(circle.value == doctest::Approx(std::sqrt(6.0)));
    const auto sphere = bm_constant(MeasureModel::sphere(2), Body::axis_cross(2), 2);
    CHECK(sphere.value >= 1.0);
    CHECK(sphere.provenance == BMBound::Provenance::GridEstimated);
    for (int n : {40, 80}) CHECK(std::pow(bm_constant(MeasureModel::torus(2), Body::simplex(2), n).value, 1.0 / n) < 1.1);

    // Random torus polynomials never exceed M_n times their L2 norm on a fine grid.
    const auto basis = orthonormal_basis(MeasureModel::torus(2), Body::simplex(2), 3);
    auto rng = CounterRng::keyed(17);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Complex> a(basis.size());
      double norm2 = 0.0;
      for (auto& c : a) norm2 += std::norm(c = rng.complex_gaussian());
      const auto p = basis.to_monomial(a);
      double sup = 0.0;
      for (int i = 0; i < 64; ++i)
        for (int j = 0; j < 64; ++j) {
          const Point z{std::polar(1.0, 2 * std::numbers::pi * i / 64), std::polar(1.0, 2 * std::numbers::pi * j / 64)};
          sup = std::max(sup, std::abs(p.evaluate(z)));
        }
      CHECK(sup <= torus.value * std::sqrt(norm2) * (1 + 1e-12));
    }
  }

  TEST_CASE("construction guards") {
    CHECK_THROWS_AS(MeasureModel::arcsine(1, 1), DomainError);
    CHECK_THROWS_AS(MeasureModel::circle({}), DomainError);
    CHECK_THROWS_AS(MeasureModel::discrete({{Complex{1, 0}}}, {-1.0}), DomainError);
    CHECK(MeasureModel::torus(2).monomial_orthogonal());
    CHECK(MeasureModel::sphere(2).monomial_orthogonal());
    CHECK_FALSE(MeasureModel::sphere(2).is_tensor());
    CHECK(MeasureModel::product({MeasureModel::arcsine(-1, 1), MeasureModel::circle({1.0})}).is_tensor());
    CHECK(support_sample(MeasureModel::sphere(3), 100).size() == 100);
    for (const auto& z : support_sample(MeasureModel::sphere(2), 50))
      CHECK(std::norm(z[0]) + std::norm(z[1]) == doctest::Approx(1.0));
  }
}
