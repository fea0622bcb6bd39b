#ifndef BOHR_PROBLEM_HPP
#define BOHR_PROBLEM_HPP

#include <cstdint>

#include "bohr/equations.hpp"
#include "bohr/series.hpp"
#include "bohr/solver.hpp"

namespace bohr {

/// One Bohr-radius problem: a mapping class, the polynomial P and the shape
/// of the left-hand side.
struct RadiusProblem {
  ClassSpec cls;
  BohrPolynomial poly;
  ProblemVariant variant;

  friend bool operator==(const RadiusProblem&, const RadiusProblem&) = default;
};

/// Throws std::invalid_argument for combinations without a radius equation:
/// RatioArea on W0H, WithPowerTerm on a stable class.
void validate(const RadiusProblem& problem);

/// The radius equation of a problem, split into the extremal left-hand side
/// and the boundary distance it is compared against. The W0H distance is
/// evaluated once at construction.
class RadiusEquation {
 public:
  explicit RadiusEquation(RadiusProblem problem,
                          double eps = series::kDefaultEps);

  const RadiusProblem& problem() const noexcept { return problem_; }

  double lhs(double r) const;
  double rhs() const noexcept { return rhs_; }
  double operator()(double r) const { return lhs(r) - rhs_; }

  /// Upper end of the search interval: 1 - 1e-6, or just inside the ratio
  /// bound's singularity for RatioArea.
  double domain_hi() const noexcept { return domain_hi_; }

  /// Largest series term count among the evaluations behind lhs(r) and
  /// rhs(); 0 for the closed-form stable classes.
  std::int64_t terms_used(double r) const;

  ScalarFunction as_function() const;

 private:
  RadiusProblem problem_;
  double eps_;
  double rhs_ = 0.0;
  std::int64_t rhs_terms_ = 0;
  double domain_hi_ = series::kMaxRadius;
};

/// Brackets and bisects the radius of a problem. Throws NoRootError when the
/// equation has no sign change.
RadiusResult solve_radius(const RadiusEquation& equation,
                          double tol = solver::kDefaultTol);
RadiusResult solve_radius(const RadiusProblem& problem,
                          double tol = solver::kDefaultTol);

}  // namespace bohr

#endif  // BOHR_PROBLEM_HPP
