#ifndef BOHR_VERIFY_HPP
#define BOHR_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "bohr/problem.hpp"

namespace bohr {

enum class Verdict { kConsistent, kViolation, kDomainLimited };

struct GridPoint {
  double r = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// Inequality sweep of an extremal function around its computed radius.
struct VerificationReport {
  RadiusProblem problem;
  std::optional<RadiusResult> radius;  // empty when no root exists
  std::vector<GridPoint> grid;         // ascending in r
  double max_crosscheck_dev = 0.0;
  Verdict verdict = Verdict::kDomainLimited;
  std::string note;
};

enum class Status { kMatch, kMismatch, kSeeNotes };

/// One published constant against the value recomputed here.
struct ComparisonRow {
  std::string claim_id;
  double paper_value = 0.0;
  double computed_value = 0.0;
  double abs_dev = 0.0;
  double tolerance = 0.0;
  Status status = Status::kMismatch;
  Status expected = Status::kMatch;
  std::string note;
};

std::string to_string(Verdict verdict);
std::string to_string(Status status);

namespace verify {

/// lhs <= rhs + kHoldsSlack counts as the inequality holding.
inline constexpr double kHoldsSlack = 1e-9;

/// Grid points closer than this to the radius are not required to fail.
inline constexpr double kBoundaryBand = 1e-6;

/// Solves the radius, then samples the extremal left-hand side against the
/// class's boundary distance on grid_n evenly spaced points of
/// [0, min(domain_hi, 1.5 * radius)]. CONSISTENT when the inequality holds
/// at every point up to the radius and fails at every point beyond it;
/// DOMAIN_LIMITED when the equation has no root. Grid points are evaluated
/// concurrently. Throws std::invalid_argument for grid_n < 10 or an invalid
/// problem.
VerificationReport verify_bohr_inequality(const ClassSpec& cls,
                                          const BohrPolynomial& poly,
                                          const ProblemVariant& variant,
                                          int grid_n);

/// Maximum absolute deviation between the alpha = 1/2 closed forms and
/// direct summation: majorant tail and area tail on r = i / (grid_n + 1),
/// i = 1..grid_n, and the distance constant. Throws std::invalid_argument for
/// grid_n < 2.
double cross_check_closed_forms(int grid_n);

/// Recomputes every printed radius and constant and pairs each with its
/// hard-coded expected status.
std::vector<ComparisonRow> reproduce_published_values();

/// True when every row's status equals its expected status.
bool all_as_expected(const std::vector<ComparisonRow>& rows);

/// The alpha = 1/2, P(w) = w closed forms have removable singularities at
/// r = 0; these wrap them with their limits there for bracketing.
ScalarFunction f_literal_function();
ScalarFunction f_corrected_function();
ScalarFunction t_literal_function();

}  // namespace verify
}  // namespace bohr

#endif  // BOHR_VERIFY_HPP
