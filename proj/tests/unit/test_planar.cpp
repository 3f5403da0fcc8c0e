#include <doctest.h>

#include <cmath>
#include <numbers>

#include <excc/error.hpp>
#include <excc/planar.hpp>
#include <excc/rng.hpp>

using namespace excc;

namespace {

// Logarithmic potential of the arcsine law on [-1, 1] plus log 2.
double segment_green_oracle(Complex z) {
  const int m = 20000;
  double sum = 0.0;
  for (int i = 0; i < m; ++i) {
    const double theta = std::numbers::pi * (i + 0.5) / m;
    sum += std::log(std::abs(z - std::cos(theta)));
  }
  return sum / m + std::log(2.0);
}

}  // namespace

TEST_SUITE("planar_potentials") {
  TEST_CASE("green examples") {
    const auto disk = PlanarCompactum::disk({0, 0}, 1.0);
    const auto seg = PlanarCompactum::segment(-1, 1);
    CHECK(green(disk, 2.0) == doctest::Approx(std::log(2.0)));
    CHECK(green(seg, 2.0) == doctest::Approx(std::log(2.0 + std::sqrt(3.0))).epsilon(1e-13));
    CHECK(green(disk, 0.5) == 0.0);
    CHECK_THROWS_AS(PlanarCompactum::segment(1, 1), DomainError);
    CHECK_THROWS_AS(PlanarCompactum::disk({0, 0}, 0.0), DomainError);
  }

  TEST_CASE("segment green matches the arcsine potential") {
    const auto seg = PlanarCompactum::segment(-1, 1);
    for (Complex z : {Complex{2, 0}, Complex{0, 1}, Complex{-1.5, 0.7}, Complex{0.3, 0.05}, Complex{5, -3}})
      CHECK(green(seg, z) == doctest::Approx(segment_green_oracle(z)).epsilon(1e-6));
    const auto shifted = PlanarCompactum::segment(0, 4);
    CHECK(green(shifted, Complex{2, 2}) == doctest::Approx(segment_green_oracle(Complex{0, 1})).epsilon(1e-6));
  }

  TEST_CASE("green properties") {
    const auto disk = PlanarCompactum::disk({0.5, -0.2}, 1.5);
    const auto seg = PlanarCompactum::segment(-2, 1);
    for (int i = 0; i < 100; ++i) {
      const double t = static_cast<double>(i) / 99;
      CHECK(green(seg, -2.0 + 3.0 * t) <= 1e-12);
      CHECK(green(disk, disk.center + std::polar(1.5 * t, 6.0 * t)) <= 1e-12);
    }
    auto rng = CounterRng::keyed(11);
    for (int i = 0; i < 500; ++i) {
      const Complex z{8 * rng.uniform() - 4, 8 * rng.uniform() - 4};
      CHECK(green(seg, z) >= 0.0);
      CHECK(green(disk, z) >= 0.0);
    }
    // Robin constants: capacity 1.5 for the disk, (b - a) / 4 for the segment.
    for (double angle : {0.0, 1.0, 2.5}) {
      const Complex far = std::polar(1e3, angle);
      CHECK(std::abs(green(disk, far) - std::log(1e3) + std::log(1.5)) < 1e-3);
      CHECK(std::abs(green(seg, far) - std::log(1e3) + std::log(0.75)) < 1e-3);
    }
  }

  TEST_CASE("product_extremal") {
    const auto bidisk = ProductSet::unit_polydisk(2);
    const Point a{2.0, 0.5};
    CHECK(product_extremal(Body::lp_ball(0.5, 2), bidisk, a) == doctest::Approx(std::log(2.0)));
    const Point e{std::numbers::e, std::numbers::e};
    CHECK(product_extremal(Body::triangle(0.5, 0.5), bidisk, e) == doctest::Approx(0.5));
    const Point inside{0.5, 0.5};
    CHECK(product_extremal(Body::simplex(2), bidisk, inside) == 0.0);
    const Point bad{1.0};
    CHECK_THROWS_AS(product_extremal(Body::simplex(2), bidisk, bad), DomainError);

    ProductSet mixed{{PlanarCompactum::segment(-1, 1), PlanarCompactum::disk({1, 0}, 0.5)}};
    auto rng = CounterRng::keyed(5);
    for (int i = 0; i < 1000; ++i) {
      const Point z{{4 * rng.uniform() - 2, 4 * rng.uniform() - 2}, {4 * rng.uniform() - 2, 4 * rng.uniform() - 2}};
      const double expected = std::max(green(mixed.factors[0], z[0]), green(mixed.factors[1], z[1]));
      CHECK(product_extremal(Body::simplex(2), mixed, z) == doctest::Approx(expected));
      CHECK(product_extremal(Body::axis_cross(2), mixed, z) == doctest::Approx(expected));
    }
  }

  TEST_CASE("ball_extremal") {
    const Point two{2.0, 2.0};
    CHECK(ball_extremal(Body::Kind::AxisCross, two) == doctest::Approx(std::log(2.0)));
    CHECK(ball_extremal(Body::Kind::Simplex, two) == doctest::Approx(0.5 * std::log(8.0)));
    const Point half{0.5, 0.5};
    CHECK(ball_extremal(Body::Kind::AxisCross, half) == 0.0);
    CHECK_THROWS_AS(ball_extremal(Body::Kind::LpBall, two), NoClosedForm);
  }

  TEST_CASE("log_indicator") {
    const double e = std::numbers::e;
    const Point a{e, 1.0};
    const Point b{e * e, e};
    const Point c{e, e};
    CHECK(log_indicator(Body::simplex(2), a) == doctest::Approx(1.0));
    CHECK(log_indicator(Body::lp_ball(0.5, 2), b) == doctest::Approx(2.0));
    CHECK(log_indicator(Body::triangle(0.5, 0.5), c) == doctest::Approx(0.5));
    auto rng = CounterRng::keyed(9);
    for (int i = 0; i < 1000; ++i) {
      const Point z{std::polar(3 * rng.uniform() + 1e-3, 1.0), std::polar(3 * rng.uniform() + 1e-3, 2.0)};
      const double expected = std::max({0.0, std::log(std::abs(z[0])), std::log(std::abs(z[1]))});
      CHECK(log_indicator(Body::simplex(2), z) == doctest::Approx(expected));
    }
  }

  TEST_CASE("entropy_f") {
    CHECK(entropy_f(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(entropy_f(1e-8) < 1e-6);
    CHECK(entropy_f(0.25) == doctest::Approx(0.5623).epsilon(1e-4));
    CHECK(entropy_f(0.25) < std::log(2.0));
    CHECK_THROWS_AS(entropy_f(0.0), DomainError);
    CHECK_THROWS_AS(entropy_f(1.0), DomainError);
    for (int i = 1; i < 100; ++i) {
      const double x = 0.005 * i;
      CHECK(entropy_f(x + 0.001) > entropy_f(x));
    }
  }
}
