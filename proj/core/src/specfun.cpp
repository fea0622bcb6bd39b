#include "bohr/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bohr::specfun {
namespace {

constexpr double kRelativeStop = 1e-17;

// Direct series for 0 <= x <= 1/2. Stops once the next term is below
// kRelativeStop * (1 + |sum|) and adds the geometric majorant of the rest.
Li2Eval li2_series(double x) {
  if (x == 0.0) {
    return {0.0, 0.0, 0};
  }
  double sum = 0.0;
  double power = x;
  int n = 1;
  for (;; ++n) {
    const double term = power / (static_cast<double>(n) * n);
    sum += term;
    power *= x;
    const double next = power / (static_cast<double>(n + 1) * (n + 1));
    if (next <= kRelativeStop * (1.0 + std::fabs(sum))) {
      break;
    }
  }
  const double m = static_cast<double>(n + 1);
  // sum_{k>n} x^k / k^2 <= x^{n+1} / ((n+1)^2 (1 - x))
  const double tail = power / (m * m * (1.0 - x));
  return {sum, tail, n};
}

}  // namespace

Li2Eval li2_eval(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("li2: argument " + std::to_string(x) +
                            " outside [0, 1]");
  }
  if (x == 1.0) {
    return {kZeta2, 0.0, 0};
  }
  if (x <= 0.5) {
    return li2_series(x);
  }
  const double y = 1.0 - x;
  Li2Eval reflected = li2_series(y);
  reflected.value = kZeta2 - std::log(x) * std::log(y) - reflected.value;
  return reflected;
}

double li2(double x) { return li2_eval(x).value; }

double log1m(double x) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw std::domain_error("log1m: argument " + std::to_string(x) +
                            " outside [0, 1)");
  }
  return std::log1p(-x);
}

}  // namespace bohr::specfun
