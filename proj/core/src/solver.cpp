#include "bohr/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bohr::solver {
namespace {

constexpr double kGridStart = 1e-4;
constexpr double kGridRatio = 1.3;
constexpr int kRefineCells = 10;

}  // namespace

Bracket bracket_root(const ScalarFunction& f, double domain_hi) {
  if (!(domain_hi > 0.0)) {
    throw std::invalid_argument("bracket_root: domain_hi must be positive");
  }
  double lo = 0.0;
  double f_lo = f(lo);
  if (!(f_lo < 0.0)) {
    throw NoRootError("no sign change: f(0) = " + std::to_string(f_lo) +
                      " is not negative");
  }

  double x = std::min(kGridStart, domain_hi);
  for (;;) {
    const double fx = f(x);
    if (fx > 0.0) {
      Bracket b{lo, x, f_lo, fx};
      // One refinement pass over the first positive cell.
      const double step = (b.hi - b.lo) / kRefineCells;
      for (int i = 1; i < kRefineCells; ++i) {
        const double t = b.lo + i * step;
        const double ft = f(t);
        if (ft < 0.0) {
          b.lo = t;
          b.f_lo = ft;
        } else if (ft > 0.0) {
          b.hi = t;
          b.f_hi = ft;
          break;
        }
      }
      return b;
    }
    if (fx < 0.0) {
      lo = x;
      f_lo = fx;
    }
    if (x >= domain_hi) {
      break;
    }
    x = std::min(x * kGridRatio, domain_hi);
  }
  throw NoRootError("no sign change on [0, " + std::to_string(domain_hi) +
                    "]: f stays non-positive");
}

RadiusResult refine_root(const ScalarFunction& f, const Bracket& bracket,
                         double tol, int max_iterations) {
  if (!(tol >= kMinTol)) {
    throw std::invalid_argument("refine_root: tol must be >= 1e-15");
  }
  if (!(bracket.lo < bracket.hi && bracket.f_lo < 0.0 && bracket.f_hi > 0.0)) {
    throw std::invalid_argument(
        "refine_root: bracket needs lo < hi and f(lo) < 0 < f(hi)");
  }

  Bracket b = bracket;
  int iterations = 0;
  while (b.hi - b.lo > tol && iterations < max_iterations) {
    const double mid = b.lo + 0.5 * (b.hi - b.lo);
    if (mid <= b.lo || mid >= b.hi) {
      break;  // no representable midpoint left
    }
    ++iterations;
    const double fm = f(mid);
    if (fm == 0.0) {
      return {mid, Bracket{mid, mid, 0.0, 0.0}, 0.0, iterations, true};
    }
    if (fm < 0.0) {
      b.lo = mid;
      b.f_lo = fm;
    } else {
      b.hi = mid;
      b.f_hi = fm;
    }
  }

  const double radius = b.lo + 0.5 * (b.hi - b.lo);
  return {radius, b, f(radius), iterations, b.hi - b.lo <= tol};
}

MonotoneCheck check_monotone(const ScalarFunction& f, double domain_hi,
                             int samples) {
  if (samples < 2) {
    throw std::invalid_argument("check_monotone: need at least 2 samples");
  }
  MonotoneCheck out;
  out.increasing = true;
  bool have_prev = false;
  double prev = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double r = domain_hi * static_cast<double>(i) / (samples - 1);
    double value = 0.0;
    try {
      value = f(r);
    } catch (const std::domain_error&) {
      ++out.skipped;
      if (!out.domain_end) {
        out.domain_end = r;
      }
      continue;
    }
    ++out.evaluated;
    if (have_prev && !(value > prev)) {
      out.increasing = false;
    }
    prev = value;
    have_prev = true;
  }
  if (out.evaluated < 2) {
    out.increasing = false;
  }
  return out;
}

}  // namespace bohr::solver
