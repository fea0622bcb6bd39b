#ifndef BOHR_SPECFUN_HPP
#define BOHR_SPECFUN_HPP

#include <numbers>

namespace bohr::specfun {

inline constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;

/// Dilogarithm Li2(x) = sum_{n>=1} x^n / n^2 on the real segment [0, 1].
///
/// Uses the defining series for x <= 1/2 and the Euler reflection
/// Li2(x) = pi^2/6 - log(x) log(1-x) - Li2(1-x) above it, so no more than
/// ~50 terms are ever summed. Absolute error is below 1e-14; li2(1) is
/// pi^2/6 exactly.
///
/// Throws std::domain_error for x outside [0, 1].
double li2(double x);

/// Same as li2() but also reports the truncation bound and number of terms
/// summed by the underlying series (after reflection, if any).
struct Li2Eval {
  double value;
  double tail_bound;
  int terms;
};
Li2Eval li2_eval(double x);

/// log(1 - x) for x in [0, 1), accurate near x = 0.
/// Throws std::domain_error outside that range.
double log1m(double x);

}  // namespace bohr::specfun

#endif  // BOHR_SPECFUN_HPP
