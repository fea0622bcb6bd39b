#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bohr/equations.hpp"
#include "bohr/solver.hpp"

using namespace bohr;

TEST_CASE("bracket and refine simple roots") {
  const ScalarFunction linear = [](double r) { return r - 1.0 / 3.0; };
  const Bracket b = solver::bracket_root(linear, 1.0);
  CHECK(b.lo < 1.0 / 3.0);
  CHECK(b.hi > 1.0 / 3.0);
  CHECK(b.f_lo < 0.0);
  CHECK(b.f_hi > 0.0);
  const RadiusResult r = solver::refine_root(linear, b);
  CHECK(r.converged);
  CHECK(std::fabs(r.radius - 1.0 / 3.0) <= 1e-12);
  CHECK(r.bracket.width() <= solver::kDefaultTol);
  CHECK(std::fabs(r.residual) <= 1e-12);

  const double target = 3.0 - 2.0 * std::sqrt(2.0);
  const ScalarFunction quad = [](double r) { return r / ((1 - r) * (1 - r)) - 0.25; };
  const RadiusResult q = solver::refine_root(quad, solver::bracket_root(quad, 0.99));
  CHECK(std::fabs(q.radius - target) <= 1e-12);
}

TEST_CASE("bracket_root reports missing roots") {
  CHECK_THROWS_AS(solver::bracket_root([](double) { return 1.0; }, 1.0),
                  NoRootError);
  CHECK_THROWS_AS(solver::bracket_root([](double) { return -1.0; }, 1.0),
                  NoRootError);
  CHECK_THROWS_AS(solver::bracket_root([](double r) { return r; }, 1.0),
                  NoRootError);
  CHECK_THROWS_AS(solver::bracket_root([](double r) { return r - 0.5; }, 0.0),
                  std::invalid_argument);
  // J2 with m = 0 starts above the distance.
  const ScalarFunction j2 = [](double r) {
    return equations::eval_j2(r, Alpha(0.5), BohrPolynomial({1.0}), 0);
  };
  CHECK_THROWS_AS(solver::bracket_root(j2, 0.999999), NoRootError);
}

TEST_CASE("bracket_root finds roots right at the domain end") {
  const ScalarFunction f = [](double r) { return r - 0.999; };
  const Bracket b = solver::bracket_root(f, 0.9995);
  CHECK(b.lo < 0.999);
  CHECK(b.hi > 0.999);
}

TEST_CASE("refine_root argument checks") {
  const ScalarFunction f = [](double r) { return r - 0.5; };
  CHECK_THROWS_AS(solver::refine_root(f, Bracket{0.0, 1.0, -0.5, 0.5}, 1e-16),
                  std::invalid_argument);
  CHECK_THROWS_AS(solver::refine_root(f, Bracket{0.0, 1.0, 0.5, 0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(solver::refine_root(f, Bracket{1.0, 0.0, -0.5, 0.5}),
                  std::invalid_argument);
  CHECK_NOTHROW(solver::refine_root(f, Bracket{0.0, 1.0, -0.5, 0.5},
                                    solver::kMinTol));
}

TEST_CASE("refine_root accepts an exact zero") {
  const ScalarFunction f = [](double r) { return r - 0.5; };
  const RadiusResult r = solver::refine_root(f, Bracket{0.0, 1.0, -0.5, 0.5});
  CHECK(r.converged);
  CHECK(r.radius == 0.5);
  CHECK(r.residual == 0.0);
  CHECK(r.iterations == 1);
  CHECK(r.bracket.width() == 0.0);
}

TEST_CASE("refine_root reports an exhausted budget") {
  const ScalarFunction f = [](double r) { return r - 1.0 / 3.0; };
  const RadiusResult r =
      solver::refine_root(f, Bracket{0.0, 1.0, -1.0 / 3.0, 2.0 / 3.0}, 1e-12, 5);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 5);
  CHECK(r.bracket.width() == doctest::Approx(1.0 / 32.0));
  CHECK(r.bracket.lo < 1.0 / 3.0);
  CHECK(r.bracket.hi > 1.0 / 3.0);
}

TEST_CASE("the root does not depend on the starting bracket") {
  const ScalarFunction f = [](double r) {
    return equations::eval_stable_convex(r, BohrPolynomial({1.0}));
  };
  const double a = solver::refine_root(f, solver::bracket_root(f, 0.999999)).radius;
  const double b = solver::refine_root(f, Bracket{0.0, 0.9, f(0.0), f(0.9)}).radius;
  const double c = solver::refine_root(f, Bracket{0.25, 0.3, f(0.25), f(0.3)}).radius;
  CHECK(std::fabs(a - b) <= 2e-12);
  CHECK(std::fabs(a - c) <= 2e-12);
}

TEST_CASE("check_monotone") {
  const auto up = solver::check_monotone([](double r) { return r * r; }, 1.0, 1000);
  CHECK(static_cast<bool>(up));
  CHECK(up.evaluated == 1000);
  CHECK(up.skipped == 0);
  CHECK_FALSE(up.domain_end.has_value());

  const auto bowl = solver::check_monotone(
      [](double r) { return (r - 0.5) * (r - 0.5); }, 1.0, 1000);
  CHECK_FALSE(static_cast<bool>(bowl));

  const auto flat = solver::check_monotone([](double) { return 1.0; }, 1.0, 10);
  CHECK_FALSE(flat.increasing);

  const auto limited = solver::check_monotone(
      [](double r) {
        if (r > 0.5) {
          throw std::domain_error("out");
        }
        return r;
      },
      1.0, 101);
  CHECK(limited.increasing);
  CHECK(limited.evaluated == 51);
  CHECK(limited.skipped == 50);
  REQUIRE(limited.domain_end.has_value());
  CHECK(*limited.domain_end == doctest::Approx(0.51));

  CHECK_THROWS_AS(solver::check_monotone([](double r) { return r; }, 1.0, 1),
                  std::invalid_argument);
}
