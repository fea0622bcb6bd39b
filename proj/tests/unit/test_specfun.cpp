#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "bohr/specfun.hpp"
#include "naive.hpp"

using bohr::specfun::li2;
using bohr::specfun::li2_eval;
using bohr::specfun::log1m;

TEST_CASE("li2 reference values") {
  CHECK(li2(0.0) == 0.0);
  CHECK(li2(1.0) == std::numbers::pi * std::numbers::pi / 6.0);
  // Frozen from oracle::li2 (naive long-double summation).
  CHECK(li2(0.25) == doctest::Approx(0.26765263908273261).epsilon(1e-15));
  CHECK(li2(0.5) == doctest::Approx(0.58224052646501251).epsilon(1e-15));
  // Closed value at 1/2.
  const double ln2 = std::numbers::ln2;
  CHECK(std::fabs(li2(0.5) - (std::numbers::pi * std::numbers::pi / 12.0 -
                              ln2 * ln2 / 2.0)) <= 1e-15);
}

TEST_CASE("li2 rejects arguments outside [0, 1]") {
  CHECK_THROWS_AS(li2(-1e-12), std::domain_error);
  CHECK_THROWS_AS(li2(1.0 + 1e-12), std::domain_error);
  CHECK_THROWS_AS(li2(std::nan("")), std::domain_error);
}

TEST_CASE("li2 matches naive summation below 1/2") {
  for (int i = 0; i <= 500; ++i) {
    const double x = 0.5 * i / 500.0;
    const double expected = static_cast<double>(oracle::li2(x));
    CHECK(std::fabs(li2(x) - expected) <= 1e-14);
  }
}

TEST_CASE("li2 matches naive summation above 1/2 through reflection") {
  for (double x : {0.55, 0.6, 0.75, 0.8, 0.9}) {
    const double expected = static_cast<double>(oracle::li2(x));
    CHECK(std::fabs(li2(x) - expected) <= 1e-14);
  }
}

TEST_CASE("li2 series stays short and its tail bound is sound") {
  for (int i = 1; i < 100; ++i) {
    const double x = i / 100.0;
    const auto e = li2_eval(x);
    CHECK(e.terms <= 50);
    CHECK(e.tail_bound >= 0.0);
    CHECK(e.tail_bound <= 1e-15);
  }
}

TEST_CASE("Euler reflection residual") {
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  for (int i = 1; i <= 100; ++i) {
    const double x = i / 101.0;
    const double residual =
        li2(x) + li2(1.0 - x) - zeta2 + log1m(1.0 - x) * log1m(x);
    CHECK(std::fabs(residual) <= 1e-12);
  }
}

TEST_CASE("li2 is strictly increasing on a 1e-3 grid") {
  double prev = li2(0.0);
  for (int i = 1; i <= 1000; ++i) {
    const double v = li2(i / 1000.0);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("log1m") {
  CHECK(log1m(0.0) == 0.0);
  CHECK(log1m(0.5) == doctest::Approx(-0.69314718055994531).epsilon(1e-15));
  CHECK(log1m(0.9) == doctest::Approx(-2.3025850929940457).epsilon(1e-15));
  // No cancellation near zero: log(1 - x) = -x - x^2/2 - ...
  const double x = 1e-10;
  CHECK(std::fabs(log1m(x) - (-x - x * x / 2.0)) <=
        4 * std::numeric_limits<double>::epsilon() * x);
  CHECK_THROWS_AS(log1m(1.0), std::domain_error);
  CHECK_THROWS_AS(log1m(-0.1), std::domain_error);
}
