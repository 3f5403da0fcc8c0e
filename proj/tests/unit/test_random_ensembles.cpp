#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numbers>

#include <excc/error.hpp>
#include <excc/random_ensembles.hpp>

using namespace excc;

namespace {

PolyC make_poly(const Body& body, int n, const std::map<MultiIndex, Complex>& terms) {
  auto lat = std::make_shared<const LatticeBasis>(lattice(body, n));
  std::vector<Complex> c(lat->size());
  for (const auto& [idx, value] : terms) c[*lat->find(idx)] = value;
  return PolyC(lat, c);
}

EnsembleConfig torus_config(const Body& body, int n, int samples, std::uint64_t seed, GridSpec grid) {
  EnsembleConfig cfg;
  cfg.basis = std::make_shared<const OrthoBasis>(orthonormal_basis(MeasureModel::torus(2), body, n));
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.grid = std::move(grid);
  return cfg;
}

bool contains_point(const std::vector<Point>& pts, Complex a, Complex b) {
  return std::any_of(pts.begin(), pts.end(),
                     [&](const Point& p) { return std::abs(p[0] - a) < 1e-8 && std::abs(p[1] - b) < 1e-8; });
}

}  // namespace

TEST_SUITE("random_ensembles") {
  TEST_CASE("coefficient laws") {
    const auto gauss = CoefficientLaw::gaussian();
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
      auto rng = CounterRng::keyed(1, i);
      sum += std::norm(gauss.draw(rng));
    }
    CHECK(sum / 100000 == doctest::Approx(1.0).epsilon(0.02));
    const auto disk = CoefficientLaw::uniform_disk(1.0);
    for (int i = 0; i < 10000; ++i) {
      auto rng = CounterRng::keyed(2, i);
      CHECK(std::abs(disk.draw(rng)) <= 1.0);
    }
    CHECK(gauss.density_bound() == doctest::Approx(1.0 / std::numbers::pi));
    CHECK(disk.density_bound() == doctest::Approx(1.0 / std::numbers::pi));
    for (double r : {2.0, 4.0, 8.0}) {
      CHECK(gauss.tail_mass(r) == doctest::Approx(std::exp(-r * r)));
      CHECK(gauss.tail_hypothesis_holds(r));
      CHECK(disk.tail_mass(r) == 0.0);
      CHECK(disk.tail_hypothesis_holds(r));
    }
    CHECK_THROWS_AS(CoefficientLaw::uniform_disk(0.0), DomainError);
  }

  TEST_CASE("sampling is deterministic") {
    const auto cfg = torus_config(Body::lp_ball(0.5, 2), 10, 5, 99, GridSpec::single({2, 0.5}));
    CHECK(sample_coefficients(cfg, 3) == sample_coefficients(cfg, 3));
    CHECK(sample_coefficients(cfg, 3) != sample_coefficients(cfg, 4));
    auto other = cfg;
    other.seed = 100;
    CHECK(sample_coefficients(cfg, 3) != sample_coefficients(other, 3));
    CHECK_THROWS_AS(sample_coefficients(cfg, 5), DomainError);
    const auto h = sample_polynomial(cfg, 2);
    const auto a = sample_coefficients(cfg, 2);
    CHECK(h.coefficient_norm() == doctest::Approx(std::sqrt([&] {
            double s = 0;
            for (auto c : a) s += std::norm(c);
            return s;
          }())));
  }

  TEST_CASE("potential_field examples") {
    const auto circle = std::make_shared<const OrthoBasis>(
        orthonormal_basis(MeasureModel::circle({1.0}), Body::simplex(1), 20));
    std::vector<Complex> a(circle->size());
    a.back() = 1.0;
    const std::vector<Point> pts{{Complex{1.5, 0.2}}, {Complex{-3, 1}}};
    const auto f = potential_field(*circle, a, pts);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(f[i] == doctest::Approx(std::log(std::abs(pts[i][0]))));

    const auto one = make_poly(Body::simplex(2), 4, {{{0, 0}, 1.0}});
    for (double v : potential_field(one, {{0.3, 7.0}, {2.0, 2.0}})) CHECK(v == 0.0);
    const auto zero_at = make_poly(Body::simplex(2), 2, {{{1, 0}, 1.0}});
    CHECK(potential_field(zero_at, {{0.0, 1.0}})[0] == -INFINITY);
  }

  TEST_CASE("potential field stays below the Bergman bound") {
    const auto body = Body::lp_ball(0.5, 2);
    for (const auto& measure : {MeasureModel::torus(2), MeasureModel::sphere(2)}) {
      EnsembleConfig cfg;
      const int n = 16;
      cfg.basis = std::make_shared<const OrthoBasis>(orthonormal_basis(measure, body, n));
      cfg.samples = 30;
      cfg.seed = 5;
      const BergmanEvaluator kernel(*cfg.basis);
      const auto pts = GridSpec::uniform(2, 0.2, 3.0, 5).points();
      const double m = static_cast<double>(cfg.basis->size());
      for (int i = 0; i < cfg.samples; ++i) {
        const auto a = sample_coefficients(cfg, i);
        double norm2 = 0.0;
        for (auto c : a) norm2 += std::norm(c);
        const auto field = potential_field(*cfg.basis, a, pts);
        for (std::size_t k = 0; k < pts.size(); ++k) {
          const double bound = bergman_log_estimate(kernel, pts[k]) + 0.5 * std::log(norm2) / n + 0.5 * std::log(m) / n;
          CHECK(field[k] <= bound + 1e-12);
        }
      }
    }
  }

  TEST_CASE("ensemble mean field") {
    const auto body = Body::lp_ball(0.5, 2);
    const auto cfg = torus_config(body, 32, 200, 20240611, GridSpec::single({2, 0.5}));
    const auto field = ensemble_mean_field(cfg);
    CHECK(std::abs(field.mean[0] - std::log(2.0)) <= 0.1);
    CHECK(field.hypothesis_class == "product");
    CHECK(field.clipped == 0);

    auto single = cfg;
    single.samples = 1;
    const auto one = ensemble_mean_field(single);
    const auto direct = potential_field(*single.basis, sample_coefficients(single, 0), one.points);
    CHECK(one.mean[0] == direct[0]);
    CHECK(one.stddev[0] == 0.0);

    const auto wide = GridSpec::single({3.0, 2.5});
    const auto small = ensemble_mean_field(torus_config(body, 16, 100, 3, wide));
    const auto large = ensemble_mean_field(torus_config(body, 64, 100, 3, wide));
    CHECK(large.stddev[0] < small.stddev[0]);
  }

  TEST_CASE("slice zeros") {
    const auto h = make_poly(Body::simplex(2), 7, {{{7, 0}, 1.0}, {{0, 0}, -1.0}});
    auto roots = slice_zeros(h, 0, {0.0, Complex{0.3, 0.8}});
    REQUIRE(roots.size() == 7);
    for (const auto& r : roots) {
      CHECK(std::abs(std::pow(r, 7) - 1.0) < 1e-10);
      CHECK(std::abs(r) == doctest::Approx(1.0));
    }
    const auto q = make_poly(Body::simplex(2), 2, {{{2, 0}, 1.0}, {{0, 1}, -1.0}});
    roots = slice_zeros(q, 0, {0.0, 4.0});
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
    REQUIRE(roots.size() == 2);
    CHECK(std::abs(roots[0] + 2.0) < 1e-12);
    CHECK(std::abs(roots[1] - 2.0) < 1e-12);
    CHECK_THROWS_AS(slice_zeros(make_poly(Body::simplex(2), 2, {{{0, 1}, 1.0}}), 0, {0.0, 0.0}), DomainError);

    const auto cfg = torus_config(Body::lp_ball(0.5, 2), 20, 10, 8, GridSpec::single({1, 1}));
    for (int i = 0; i < cfg.samples; ++i) {
      const auto poly = sample_polynomial(cfg, i);
      const Point fixed{0.0, std::polar(1.0, 0.3 * i)};
      const auto coeffs = slice_coefficients(poly, 0, fixed);
      const auto rs = slice_zeros(poly, 0, fixed);
      int degree = static_cast<int>(coeffs.size()) - 1;
      while (degree > 0 && std::abs(coeffs[static_cast<std::size_t>(degree)]) == 0.0) --degree;
      CHECK(static_cast<int>(rs.size()) == degree);
      for (const auto& r : rs) {
        Point z = fixed;
        z[0] = r;
        // Backward error against the evaluation scale sum |c_k| |r|^k; the
        // absolute bound is only attainable for moderate |r|.
        double scale = 0.0;
        for (std::size_t k = 0; k < coeffs.size(); ++k) scale += std::abs(coeffs[k]) * std::pow(std::abs(r), double(k));
        CHECK(std::abs(poly.evaluate(z)) <= 1e-12 * scale);
        if (std::abs(r) <= 1.5) CHECK(std::abs(poly.evaluate(z)) < 1e-8 * (1 + poly.coefficient_norm()));
      }
    }
  }

  TEST_CASE("zero statistics") {
    std::vector<Complex> unit;
    for (int i = 0; i < 2000; ++i) {
      auto rng = CounterRng::keyed(31, i);
      unit.push_back(std::polar(1.0, 2 * std::numbers::pi * rng.uniform()));
    }
    const auto s = zero_statistics(unit);
    CHECK(s.count == 2000);
    CHECK(std::abs(s.mean_log_abs) < 1e-12);
    CHECK(s.ks_angle < 0.04);
    CHECK(s.ks_angle >= 0.0);

    const auto zeros = zero_statistics(std::vector<Complex>(200, 0.0));
    CHECK(zeros.mean_log_abs == kLogZeroSentinel);
    CHECK(zeros.clipped == 200);
    CHECK(zeros.ks_angle == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(zero_statistics(std::vector<Complex>(99, 1.0)), DomainError);

    std::vector<Complex> spread;
    for (int i = 0; i < 100; ++i) spread.push_back(std::exp(0.01 * i));
    const auto q = zero_statistics(spread);
    CHECK(q.quantile_levels.size() == q.log_abs_quantiles.size());
    CHECK(std::is_sorted(q.log_abs_quantiles.begin(), q.log_abs_quantiles.end()));
    CHECK(q.log_abs_quantiles[2] == doctest::Approx(0.495).epsilon(0.02));
  }

  TEST_CASE("common zeros by Newton") {
    const auto h1 = make_poly(Body::simplex(2), 2, {{{2, 0}, 1.0}, {{0, 0}, -1.0}});
    const auto h2 = make_poly(Body::simplex(2), 2, {{{0, 2}, 1.0}, {{0, 0}, -1.0}});
    const auto four = common_zeros_newton(h1, h2, 200, 1);
    CHECK(four.size() == 4);
    for (double a : {-1.0, 1.0})
      for (double b : {-1.0, 1.0}) CHECK(contains_point(four, a, b));

    const auto g1 = make_poly(Body::simplex(2), 2, {{{1, 0}, 1.0}, {{0, 1}, -1.0}});
    const auto g2 = make_poly(Body::simplex(2), 2, {{{1, 1}, 1.0}, {{0, 0}, -1.0}});
    const auto two = common_zeros_newton(g1, g2, 200, 2);
    CHECK(two.size() == 2);
    CHECK(contains_point(two, 1.0, 1.0));
    CHECK(contains_point(two, -1.0, -1.0));
    CHECK(common_zeros_newton(g1, g2, 50, 2) == common_zeros_newton(g1, g2, 50, 2));
  }

  TEST_CASE("hypothesis labels") {
    CHECK(hypothesis_class(MeasureModel::torus(2)) == "product");
    CHECK(hypothesis_class(MeasureModel::sphere(2)).find("unverified") != std::string::npos);
  }
}
