#include <doctest.h>

#include <excc/error.hpp>
#include <excc/simplex_lp.hpp>

using namespace excc;

TEST_SUITE("simplex_lp") {
  TEST_CASE("small textbook problem") {
    // max 3x + 2y  s.t. x + y <= 4, x + 3y <= 6, x >= 0, y >= 0.
    InequalityLp lp;
    lp.a.resize(4, 2);
    lp.a << 1, 1, 1, 3, -1, 0, 0, -1;
    lp.b.resize(4);
    lp.b << 4, 6, 0, 0;
    lp.c.resize(2);
    lp.c << -3, -2;
    const auto s = solve_lp(lp);
    CHECK(s.value == doctest::Approx(-12.0));
    CHECK(s.x(0) == doctest::Approx(4.0));
    CHECK(s.x(1) == doctest::Approx(0.0).scale(1.0));
  }

  TEST_CASE("free variables and degenerate vertices") {
    // min t s.t. |x - v_i| <= t: the Chebyshev center of {0, 1, 5} is 2.5.
    InequalityLp lp;
    const double v[] = {0.0, 1.0, 5.0, 5.0, 1.0};
    lp.a.resize(10, 2);
    lp.b.resize(10);
    for (int i = 0; i < 5; ++i) {
      lp.a.row(2 * i) << 1, -1;
      lp.b(2 * i) = v[i];
      lp.a.row(2 * i + 1) << -1, -1;
      lp.b(2 * i + 1) = -v[i];
    }
    lp.c.resize(2);
    lp.c << 0, 1;
    const auto s = solve_lp(lp);
    CHECK(s.value == doctest::Approx(2.5));
    CHECK(s.x(0) == doctest::Approx(2.5));
    CHECK(((lp.a * s.x - lp.b).array() <= 1e-9).all());
  }

  TEST_CASE("infeasible and unbounded problems") {
    InequalityLp infeasible;
    infeasible.a.resize(2, 1);
    infeasible.a << 1, -1;
    infeasible.b.resize(2);
    infeasible.b << -1, -1;  // x <= -1 and x >= 1
    infeasible.c.resize(1);
    infeasible.c << 1;
    CHECK_THROWS_AS(solve_lp(infeasible), NumericalError);

    InequalityLp unbounded;
    unbounded.a.resize(1, 1);
    unbounded.a << 1;
    unbounded.b.resize(1);
    unbounded.b << 1;
    unbounded.c.resize(1);
    unbounded.c << 1;  // min x with only x <= 1
    CHECK_THROWS_AS(solve_lp(unbounded), NumericalError);
  }
}
