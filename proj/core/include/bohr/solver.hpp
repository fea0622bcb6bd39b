#ifndef BOHR_SOLVER_HPP
#define BOHR_SOLVER_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace bohr {

using ScalarFunction = std::function<double(double)>;

/// An interval [lo, hi] with f(lo) < 0 < f(hi).
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;

  double width() const noexcept { return hi - lo; }
};

/// Outcome of refine_root(). When `converged`, bracket.hi - bracket.lo <= tol
/// (a degenerate bracket [radius, radius] when f hit zero exactly) and
/// `residual` = f(radius).
struct RadiusResult {
  double radius = 0.0;
  Bracket bracket;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// f has no sign change on the searched domain.
class NoRootError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace solver {

inline constexpr double kDefaultTol = 1e-12;
inline constexpr double kMinTol = 1e-15;
inline constexpr int kMaxIterations = 200;

/// Finds a sign change of an increasing f on [0, domain_hi]: f(0) must be
/// negative, then f is sampled on the geometric grid 1e-4 * 1.3^j (capped at
/// domain_hi) until it turns positive, and the first such cell is narrowed
/// once by a ten-way uniform split. Throws NoRootError when f(0) >= 0 or f
/// never becomes positive.
Bracket bracket_root(const ScalarFunction& f, double domain_hi);

/// Bisection on a valid bracket until its width is <= tol or max_iterations
/// have been spent. radius is the final midpoint; an exact zero at a
/// midpoint is accepted immediately. Returns converged = false with the best
/// bracket when the iteration budget runs out. Throws std::invalid_argument
/// for tol < kMinTol or an invalid bracket.
RadiusResult refine_root(const ScalarFunction& f, const Bracket& bracket,
                         double tol = kDefaultTol,
                         int max_iterations = kMaxIterations);

struct MonotoneCheck {
  bool increasing = false;
  int evaluated = 0;
  int skipped = 0;
  /// Smallest sample at which f raised std::domain_error, if any.
  std::optional<double> domain_end;

  explicit operator bool() const noexcept { return increasing; }
};

/// Samples f at `samples` evenly spaced points of [0, domain_hi] and reports
/// whether consecutive values strictly increase. Points where f throws
/// std::domain_error are skipped. Throws std::invalid_argument for
/// samples < 2.
MonotoneCheck check_monotone(const ScalarFunction& f, double domain_hi,
                             int samples);

}  // namespace solver
}  // namespace bohr

#endif  // BOHR_SOLVER_HPP
