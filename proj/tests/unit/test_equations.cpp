#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bohr/equations.hpp"
#include "bohr/problem.hpp"
#include "bohr/series.hpp"

using namespace bohr;

namespace {

const double kLn2 = std::numbers::ln2;

double root_of(const ScalarFunction& f, double hi = series::kMaxRadius) {
  return solver::refine_root(f, solver::bracket_root(f, hi), 1e-14).radius;
}

}  // namespace

TEST_CASE("BohrPolynomial construction") {
  CHECK(BohrPolynomial().is_zero());
  CHECK(BohrPolynomial(std::vector<double>{}).is_zero());
  CHECK(BohrPolynomial({1.0, 2.0}).degree() == 2);
  CHECK(BohrPolynomial({0.0, 2.0}).degree() == 2);
  CHECK(BohrPolynomial::monomial(3) == BohrPolynomial({0.0, 0.0, 1.0}));
  CHECK_THROWS_AS(BohrPolynomial({1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(BohrPolynomial({-1.0}), std::invalid_argument);
  CHECK_THROWS_AS(BohrPolynomial({std::nan("")}), std::invalid_argument);
  CHECK_THROWS_AS(BohrPolynomial({INFINITY}), std::invalid_argument);
  CHECK(BohrPolynomial::monomial(0).is_zero());
}

TEST_CASE("poly_eval") {
  CHECK(poly_eval(BohrPolynomial(), 0.7) == 0.0);
  CHECK(poly_eval(BohrPolynomial({2.0, 3.0}), 0.5) == 2.0 * 0.5 + 3.0 * 0.25);
  CHECK(poly_eval(BohrPolynomial({16.0 / 9.0, 18.6095}), 0.5) ==
        doctest::Approx(5.541263888888889).epsilon(1e-14));
  CHECK(BohrPolynomial({1.0})(0.3) == 0.3);
  CHECK_THROWS_AS(poly_eval(BohrPolynomial({1.0}), -0.1), std::domain_error);
}

TEST_CASE("WithPowerTerm and names") {
  CHECK_THROWS_AS(WithPowerTerm(-1), std::invalid_argument);
  CHECK(WithPowerTerm(0).m() == 0);
  CHECK(to_string(ClassSpec{W0H{Alpha(0.5)}}) == "w0h");
  CHECK(to_string(ClassSpec{StableConvex{}}) == "stable-convex");
  CHECK(to_string(ClassSpec{StableUnivalent{}}) == "stable-univalent");
  CHECK(to_string(ProblemVariant{MajorantOnly{}}) == "majorant");
  CHECK(to_string(ProblemVariant{WithPowerTerm(2)}) == "power:2");
  CHECK(to_string(ProblemVariant{RatioArea{}}) == "ratio");
}

TEST_CASE("eval_j1 at r = 0 is -d(alpha)") {
  for (double a : {0.25, 0.5, 1.0}) {
    const double d = series::distance_w0h(Alpha(a)).value;
    CHECK(equations::eval_j1(0.0, Alpha(a), BohrPolynomial({1.0})) ==
          doctest::Approx(-d).epsilon(1e-15));
  }
}

TEST_CASE("eval_j2 for m = 0 has no root") {
  // M^0 = 1 exceeds d(alpha) < 1 everywhere.
  for (double r : {0.0, 0.2, 0.5, 0.9}) {
    CHECK(equations::eval_j2(r, Alpha(0.5), BohrPolynomial({1.0}), 0) > 0.0);
  }
}

TEST_CASE("eval_j1 roots match the brute-force oracle") {
  const auto root_j1 = [](double a, BohrPolynomial p) {
    return root_of([a, p](double r) {
      return equations::eval_j1(r, Alpha(a), p);
    });
  };
  CHECK(std::fabs(root_j1(0.5, BohrPolynomial()) - 0.40569587176282461) <= 1e-11);
  CHECK(std::fabs(root_j1(0.5, BohrPolynomial({1.0})) - 0.33319326819057896) <=
        1e-11);
  CHECK(std::fabs(root_j1(0.5, BohrPolynomial({16.0 / 9.0, 18.6095})) -
                  0.26238548756585849) <= 1e-11);
  CHECK(std::fabs(root_j1(1.0, BohrPolynomial()) - 0.48888791970419893) <= 1e-11);
  CHECK(std::fabs(root_j1(0.25, BohrPolynomial()) - 0.35099937178375778) <=
        1e-11);
  CHECK(std::fabs(root_j1(0.75, BohrPolynomial()) - 0.45096178027377029) <=
        1e-11);
}

TEST_CASE("eval_j2 roots match the brute-force oracle") {
  const auto root_j2 = [](int m) {
    return root_of([m](double r) {
      return equations::eval_j2(r, Alpha(0.5), BohrPolynomial({1.0}), m);
    });
  };
  CHECK(std::fabs(root_j2(1) - 0.30205906248345292) <= 1e-11);
  CHECK(std::fabs(root_j2(2) - 0.38314694943097273) <= 1e-11);
}

TEST_CASE("closed forms at alpha = 1/2") {
  for (int i = 1; i <= 19; ++i) {
    const double r = i / 20.0;
    CAPTURE(r);
    // The literal and corrected F differ only in their constant.
    CHECK(std::fabs(equations::eval_f_corrected(r) - equations::eval_f_literal(r) -
                    (12.0 - 16.0 * kLn2)) <= 1e-12);
    // F_corrected and T_literal reproduce the series equations.
    CHECK(std::fabs(equations::eval_f_corrected(r) -
                    equations::eval_j1(r, Alpha(0.5), BohrPolynomial({1.0}))) <=
          1e-10);
    CHECK(std::fabs(equations::eval_t_literal(r) -
                    equations::eval_j2(r, Alpha(0.5), BohrPolynomial({1.0}), 1)) <=
          1e-10);
  }
  CHECK_THROWS_AS(equations::eval_f_literal(0.0), std::domain_error);
  CHECK_THROWS_AS(equations::eval_f_corrected(1.0), std::domain_error);
  CHECK_THROWS_AS(equations::eval_t_literal(-0.1), std::domain_error);
}

TEST_CASE("closed-form roots") {
  const auto f_lit = [](double r) {
    return r <= 0.0 ? 8.0 * kLn2 - 7.0 : equations::eval_f_literal(r);
  };
  const auto t_lit = [](double r) {
    return r <= 0.0 ? 5.0 - 8.0 * kLn2 : equations::eval_t_literal(r);
  };
  CHECK(std::fabs(root_of(f_lit) - 0.600880682) <= 1e-8);
  CHECK(std::fabs(root_of(t_lit) - 0.3020590624834529) <= 1e-11);
}

TEST_CASE("stable-class bounds") {
  namespace b = equations::bounds;
  CHECK(b::convex_majorant(0.5) == 1.0);
  CHECK(b::univalent_majorant(0.5) == 2.0);
  CHECK(b::convex_area(0.5) == doctest::Approx(0.25 / 0.5625).epsilon(1e-15));
  CHECK(b::univalent_area(0.0) == 0.0);
  CHECK(b::convex_ratio(0.0) == 0.0);
  CHECK_THROWS_AS(b::convex_ratio(0.62), std::domain_error);
  CHECK_THROWS_AS(b::univalent_ratio(0.62), std::domain_error);
  CHECK(equations::stable_convex_ratio_limit() ==
        doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0).epsilon(1e-15));
  CHECK(std::fabs(equations::stable_univalent_ratio_limit() -
                  0.45685025174785665) <= 1e-12);
  CHECK_THROWS_AS(equations::eval_stable_convex_ratio(0.62, BohrPolynomial({1.0})),
                  std::domain_error);
  CHECK_THROWS_AS(
      equations::eval_stable_univalent_ratio(0.5, BohrPolynomial({1.0})),
      std::domain_error);
}

TEST_CASE("stable-class roots") {
  const BohrPolynomial zero;
  const BohrPolynomial one({1.0});
  const BohrPolynomial two({1.0, 1.0});
  const auto root = [](auto eval, const BohrPolynomial& p, double hi) {
    return root_of([eval, p](double r) { return eval(r, p); }, hi);
  };
  const double hi = series::kMaxRadius;
  CHECK(std::fabs(root(equations::eval_stable_convex, zero, hi) - 1.0 / 3.0) <=
        1e-12);
  CHECK(std::fabs(root(equations::eval_stable_univalent, zero, hi) -
                  (3.0 - 2.0 * std::sqrt(2.0))) <= 1e-12);
  CHECK(std::fabs(root(equations::eval_stable_convex, one, hi) -
                  0.28687563921295026) <= 1e-11);
  CHECK(std::fabs(root(equations::eval_stable_convex, two, hi) -
                  0.2835902180517802) <= 1e-11);
  CHECK(std::fabs(root(equations::eval_stable_univalent, one, hi) -
                  0.15663767908791033) <= 1e-11);
  CHECK(std::fabs(root(equations::eval_stable_univalent, two, hi) -
                  0.15626912241719358) <= 1e-11);
  CHECK(std::fabs(root(equations::eval_stable_convex_ratio, one,
                       equations::stable_convex_ratio_limit() - 1e-9) -
                  0.28326338770363542) <= 1e-11);
  CHECK(std::fabs(root(equations::eval_stable_univalent_ratio, one,
                       equations::stable_univalent_ratio_limit() - 1e-9) -
                  0.15625799608780694) <= 1e-11);
}

TEST_CASE("RadiusProblem validation") {
  CHECK_THROWS_AS(validate({W0H{Alpha(0.5)}, BohrPolynomial(), RatioArea{}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate({StableConvex{}, BohrPolynomial(), WithPowerTerm(1)}),
                  std::invalid_argument);
  CHECK_NOTHROW(validate({StableUnivalent{}, BohrPolynomial(), RatioArea{}}));
  CHECK_NOTHROW(validate({W0H{Alpha(0.5)}, BohrPolynomial(), WithPowerTerm(3)}));
}

TEST_CASE("RadiusEquation") {
  const RadiusEquation w({W0H{Alpha(0.5)}, BohrPolynomial({1.0}), MajorantOnly{}});
  CHECK(w.rhs() == doctest::Approx(8.0 * kLn2 - 5.0).epsilon(1e-14));
  CHECK(w.domain_hi() == series::kMaxRadius);
  CHECK(w(0.3) == equations::eval_j1(0.3, Alpha(0.5), BohrPolynomial({1.0})));
  CHECK(w.terms_used(0.5) > 0);
  CHECK(w.as_function()(0.3) == w(0.3));

  const RadiusEquation c({StableConvex{}, BohrPolynomial({1.0}), RatioArea{}});
  CHECK(c.rhs() == 0.5);
  CHECK(c.domain_hi() < equations::stable_convex_ratio_limit());
  CHECK(c.terms_used(0.2) == 0);
  CHECK(c(0.2) == doctest::Approx(equations::eval_stable_convex_ratio(
                                      0.2, BohrPolynomial({1.0})))
                      .epsilon(1e-15));

  const RadiusResult r = solve_radius(RadiusProblem{
      StableUnivalent{}, BohrPolynomial(), MajorantOnly{}});
  CHECK(r.converged);
  CHECK(std::fabs(r.radius - (3.0 - 2.0 * std::sqrt(2.0))) <= 1e-12);
}
