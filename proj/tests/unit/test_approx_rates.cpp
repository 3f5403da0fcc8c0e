#include <doctest.h>

#include <cmath>
#include <numbers>

#include <excc/approx_rates.hpp>
#include <excc/error.hpp>
#include <excc/orthopoly.hpp>

using namespace excc;

namespace {

using Expansion = AnalyticFunction1D::Expansion;

double direct_tail(double rho, int m, bool chebyshev) {
  double sum = 0.0;
  for (int k = m + 1; k < m + 4000; ++k) {
    const double c = std::pow(rho, k + 1);
    sum += c * c * (chebyshev && k > 0 ? 0.5 : 1.0);
  }
  return std::sqrt(sum);
}

std::vector<int> range(int n_max) {
  std::vector<int> ns;
  for (int n = 1; n <= n_max; ++n) ns.push_back(n);
  return ns;
}

}  // namespace

TEST_SUITE("approx_rates") {
  TEST_CASE("one-variable functions") {
    const auto f = AnalyticFunction1D::geometric(0.5);
    CHECK(f.rate == 0.5);
    CHECK(f.rate_consistent());
    CHECK(std::abs(f.value(0.3) - 0.5 / (1.0 - 0.15)) < 1e-14);
    for (int m : {-1, 0, 3, 20})
      CHECK(f.tail(m) == doctest::Approx(direct_tail(0.5, m, false)).epsilon(1e-12));
    const auto cheb = AnalyticFunction1D::geometric(0.4, Expansion::Chebyshev);
    CHECK(cheb.basis_norm2(0) == 1.0);
    CHECK(cheb.basis_norm2(3) == 0.5);
    for (int m : {0, 5, 17}) CHECK(cheb.tail(m) == doctest::Approx(direct_tail(0.4, m, true)).epsilon(1e-12));
    // Closed-form Chebyshev value against the truncated series.
    for (double x : {-0.7, 0.2, 1.0}) {
      double series = 0.0;
      for (int k = 0; k < 200; ++k) series += std::pow(0.4, k + 1) * std::cos(k * std::acos(x));
      CHECK(cheb.value(x).real() == doctest::Approx(series).epsilon(1e-13));
    }
    CHECK(std::abs(cheb.tail_value(4, 0.3) - (cheb.value(0.3) - [&] {
                     double s = 0.0;
                     for (int k = 0; k <= 4; ++k) s += std::pow(0.4, k + 1) * std::cos(k * std::acos(0.3));
                     return Complex{s, 0};
                   }())) < 1e-14);

    const auto poly = AnalyticFunction1D::polynomial({1.0, 2.0, 3.0});
    CHECK(poly.degree == 2);
    CHECK(poly.tail(2) == 0.0);
    CHECK(poly.log_tail(5) == -INFINITY);
    CHECK(poly.tail(0) == doctest::Approx(std::sqrt(13.0)));
    CHECK(AnalyticFunction1D::zero().tail(-1) == 0.0);
    CHECK_THROWS_AS(AnalyticFunction1D::geometric(1.0), DomainError);
  }

  TEST_CASE("geometry helpers") {
    CHECK(diagonal_cutoff(Body::simplex(2), 9) == 4);
    CHECK(diagonal_cutoff(Body::simplex(2), 10) == 5);
    CHECK(diagonal_cutoff(Body::axis_cross(2), 50) == 0);
    CHECK(diagonal_ratio(Body::lp_ball(0.5, 2)) == doctest::Approx(0.25));
    CHECK(diagonal_ratio(Body::triangle(0.5, 0.5)) == doctest::Approx(0.25));
    CHECK(axis_extent(Body::triangle(0.25, 0.75), 8, 0) == 6);
    CHECK(axis_extent(Body::triangle(0.25, 0.75), 8, 1) == 2);
    for (double p : {0.3, 0.5, 0.8}) {
      const auto body = Body::lp_ball(p, 2);
      for (int n : {10, 57, 200, 400}) {
        const int cut = diagonal_cutoff(body, n);
        CHECK(std::abs(static_cast<double>(cut) / n - std::pow(0.5, 1.0 / p)) <= 1.0 / n);
        // Scan oracle.
        int scan = 0;
        while (contains_scaled(body, MultiIndex{scan + 1, scan + 1}, n)) ++scan;
        CHECK(cut == scan);
      }
    }
  }

  TEST_CASE("separable errors") {
    const auto fn = TwoVarFunction::separable(AnalyticFunction1D::geometric(0.5), AnalyticFunction1D::geometric(1.0 / 3));
    const auto body = Body::lp_ball(0.5, 2);
    CHECK(best_error_separable(body, 7, fn) ==
          doctest::Approx(std::hypot(direct_tail(0.5, 7, false), direct_tail(1.0 / 3, 7, false))));
    const auto only_f = TwoVarFunction::separable(AnalyticFunction1D::geometric(0.5), AnalyticFunction1D::zero());
    CHECK(best_error_separable(body, 9, only_f) == doctest::Approx(direct_tail(0.5, 9, false)));
    CHECK_THROWS(best_error_diagonal(body, 5, fn));

    const auto report = rate_study(body, fn, 400);
    CHECK(report.fitted_l2 == doctest::Approx(0.5).epsilon(0.01));
    const auto tri = rate_study(Body::triangle_from_cuts(0.75, 0.25), fn, 400);
    CHECK(tri.target == doctest::Approx(std::max(std::pow(0.5, 0.75), std::pow(1.0 / 3, 0.25))));
    CHECK(tri.fitted_l2 == doctest::Approx(tri.target).epsilon(0.01));
    for (std::size_t i = 1; i < report.ns.size(); ++i) CHECK(report.log_errors_l2[i] <= report.log_errors_l2[i - 1]);
  }

  TEST_CASE("projection onto Poly(nC) lives on the axes") {
    // Dense Gram projection of F = f(z) + g(w) on the torus, inner products by
    // an M x M trapezoid rule (exact up to aliasing of order rho^M).
    const double rho_f = 0.5, rho_g = 0.3;
    const auto fn = TwoVarFunction::separable(AnalyticFunction1D::geometric(rho_f), AnalyticFunction1D::geometric(rho_g));
    const int m_grid = 96;
    auto f_value = [&](Complex z, Complex w) { return rho_f / (1.0 - rho_f * z) + rho_g / (1.0 - rho_g * w); };
    for (const auto& body : {Body::lp_ball(0.5, 2), Body::triangle(0.4, 0.6), Body::simplex(2)}) {
      for (int n : {4, 8, 12}) {
        const auto lat = lattice(body, n);
        const auto g = gram(MeasureModel::torus(2), lat);
        Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(lat.size()));
        for (int a = 0; a < m_grid; ++a)
          for (int b = 0; b < m_grid; ++b) {
            const Complex z = std::polar(1.0, 2 * std::numbers::pi * a / m_grid);
            const Complex w = std::polar(1.0, 2 * std::numbers::pi * b / m_grid);
            const Complex fz = f_value(z, w);
            for (std::size_t j = 0; j < lat.size(); ++j)
              rhs(static_cast<Eigen::Index>(j)) +=
                  fz * std::conj(std::pow(z, lat.indices[j][0]) * std::pow(w, lat.indices[j][1]));
          }
        rhs /= double(m_grid) * m_grid;
        const Eigen::VectorXcd coef = g.ldlt().solve(rhs);
        double residual2 = 0.0;
        for (std::size_t j = 0; j < lat.size(); ++j) {
          const auto& idx = lat.indices[j];
          const Complex c = coef(static_cast<Eigen::Index>(j));
          if (idx[0] > 0 && idx[1] > 0) {
            CHECK(std::abs(c) < 1e-12);
          } else if (idx[0] > 0) {
            CHECK(std::abs(c - std::pow(rho_f, idx[0] + 1)) < 1e-12);
          } else if (idx[1] > 0) {
            CHECK(std::abs(c - std::pow(rho_g, idx[1] + 1)) < 1e-12);
          }
        }
        // Error of the projection by quadrature on a shifted grid.
        for (int a = 0; a < m_grid; ++a)
          for (int b = 0; b < m_grid; ++b) {
            const Complex z = std::polar(1.0, 2 * std::numbers::pi * (a + 0.37) / m_grid);
            const Complex w = std::polar(1.0, 2 * std::numbers::pi * (b + 0.61) / m_grid);
            Complex p{};
            for (std::size_t j = 0; j < lat.size(); ++j)
              p += coef(static_cast<Eigen::Index>(j)) * std::pow(z, lat.indices[j][0]) * std::pow(w, lat.indices[j][1]);
            residual2 += std::norm(f_value(z, w) - p);
          }
        const double l2 = std::sqrt(residual2 / (double(m_grid) * m_grid));
        CHECK(best_error_separable(body, n, fn) == doctest::Approx(l2).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("diagonal errors") {
    const auto fn = TwoVarFunction::diagonal(AnalyticFunction1D::geometric(0.5));
    const auto body = Body::lp_ball(0.5, 2);
    CHECK(best_error_diagonal(body, 12, fn) == doctest::Approx(direct_tail(0.5, 3, false)));
    const double target = std::pow(2.0, -0.25);
    CHECK(rate_study(body, fn, 400).fitted_l2 == doctest::Approx(target).epsilon(0.01));
    CHECK(rate_study(Body::triangle(0.5, 0.5), fn, 400).fitted_l2 == doctest::Approx(target).epsilon(0.01));
    CHECK(target_rate(Body::simplex(2), fn) == doctest::Approx(std::sqrt(0.5)));
  }

  TEST_CASE("subset monotonicity") {
    const auto sep = TwoVarFunction::separable(AnalyticFunction1D::geometric(0.6), AnalyticFunction1D::geometric(0.4));
    const auto diag = TwoVarFunction::diagonal(AnalyticFunction1D::geometric(0.7));
    const auto ball = Body::lp_ball(0.5, 2);
    for (double alpha : {0.1, 0.25, 0.5, 0.8}) {
      const auto tri = Body::tangent_triangle(0.5, alpha);
      for (int n = 1; n <= 60; ++n) {
        CHECK(log_best_error(tri, n, sep) >= log_best_error(ball, n, sep) - 1e-14);
        CHECK(log_best_error(tri, n, diag) >= log_best_error(ball, n, diag) - 1e-14);
      }
    }
  }

  TEST_CASE("fitted_rate") {
    std::vector<int> ns = range(400);
    std::vector<double> exact, prefactor;
    for (int n : ns) {
      exact.push_back(n * std::log(0.7));
      prefactor.push_back(2 * std::log(n) + n * std::log(0.7));
    }
    CHECK(std::abs(fitted_rate(ns, exact) - 0.7) < 1e-12);
    CHECK(fitted_rate(ns, prefactor) == doctest::Approx(0.7).epsilon(0.02));
    CHECK(fit_window_start(400) == 200);
    CHECK_THROWS(fitted_rate(range(5), std::vector<double>(5, -1.0)));
    CHECK_THROWS(fitted_rate(range(10), std::vector<double>(10, -800.0)));
  }

  TEST_CASE("normalized comparison and area check") {
    const auto sep = TwoVarFunction::separable(AnalyticFunction1D::geometric(0.5), AnalyticFunction1D::geometric(0.5));
    const auto far = normalized_compare(0.5, 0.02, sep, 400);
    CHECK(far.fitted_ball <= far.fitted_triangle);
    CHECK(far.beta == doctest::Approx(tangent_beta(0.5, 0.02)));

    const auto diag = TwoVarFunction::diagonal(AnalyticFunction1D::geometric(0.5));
    const auto iso = normalized_compare(0.5, 0.5, diag, 400);
    CHECK(iso.raw_fitted_ball == doctest::Approx(iso.raw_fitted_triangle).epsilon(1e-3));
    CHECK(iso.area_ball == doctest::Approx(1.0 / std::sqrt(6.0)));

    for (int k = 1; k <= 9; ++k) {
      const auto g = gamma_check(0.1 * k);
      CHECK(g.passes);
      CHECK(g.area_triangle <= g.area_ball);
    }
    const auto one = gamma_check(1.0);
    CHECK(one.lhs == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(one.rhs == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(one.area_triangle - one.area_ball) <= 1e-10);
    const auto half = gamma_check(0.5);
    CHECK(half.lhs == doctest::Approx(24.0));
    CHECK(half.rhs == doctest::Approx(8.0));
    CHECK_FALSE(half.printed_inequality_holds);
    CHECK(half.area_triangle == doctest::Approx(std::sqrt(0.125)));
  }

  TEST_CASE("minimax_xy") {
    CHECK(minimax_xy(1).value == doctest::Approx(0.25).epsilon(4e-3));
    CHECK(std::abs(minimax_xy(3).value - 0.25) <= 1e-3);
    CHECK(std::abs(minimax_xy(1, 33, MinimaxTarget::HalfSum).value) <= 1e-9);
    CHECK(minimax_xy(0).value == doctest::Approx(0.5));
    CHECK_THROWS_AS(minimax_xy(2, 1), DomainError);
  }

  TEST_CASE("sup and L2 rates") {
    const auto diag = TwoVarFunction::diagonal(AnalyticFunction1D::geometric(0.5));
    const auto r = sup_vs_l2_rate(diag, Body::lp_ball(0.5, 2), 200, 40);
    CHECK(r.rate_sup == doctest::Approx(r.rate_l2).epsilon(0.03));
    const auto poly = TwoVarFunction::separable(AnalyticFunction1D::polynomial({1.0, 2.0, 0.5}),
                                                AnalyticFunction1D::polynomial({0.0, 1.0}));
    CHECK(log_best_error(Body::simplex(2), 2, poly) == -INFINITY);
    CHECK(log_sup_error(Body::simplex(2), 2, poly, 20) == -INFINITY);
    CHECK(log_best_error(Body::simplex(2), 1, poly) > -INFINITY);
    // sup over K dominates the L2 norm under the probability measure.
    for (int n : {3, 10, 30})
      CHECK(log_sup_error(Body::lp_ball(0.5, 2), n, diag, 60) >= log_best_error(Body::lp_ball(0.5, 2), n, diag) - 1e-9);
  }
}
