#include "bohr/problem.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace bohr {
namespace {

constexpr double kRatioDomainMargin = 1e-9;

void check_stable_radius(double r) {
  if (!(r >= 0.0 && r <= series::kMaxRadius)) {
    throw std::domain_error("r outside [0, 1 - 1e-6]");
  }
}

}  // namespace

void validate(const RadiusProblem& problem) {
  const bool w0h = std::holds_alternative<W0H>(problem.cls);
  if (w0h && std::holds_alternative<RatioArea>(problem.variant)) {
    throw std::invalid_argument(
        "variant 'ratio' is only defined for the stable classes");
  }
  if (!w0h && std::holds_alternative<WithPowerTerm>(problem.variant)) {
    throw std::invalid_argument(
        "variant 'power:<m>' is only defined for class w0h");
  }
}

RadiusEquation::RadiusEquation(RadiusProblem problem, double eps)
    : problem_(std::move(problem)), eps_(eps) {
  validate(problem_);
  const bool ratio = std::holds_alternative<RatioArea>(problem_.variant);
  if (const auto* w = std::get_if<W0H>(&problem_.cls)) {
    const SeriesEval d = series::distance_w0h(w->alpha, eps_);
    rhs_ = d.value;
    rhs_terms_ = d.terms_used;
  } else if (std::holds_alternative<StableConvex>(problem_.cls)) {
    rhs_ = 0.5;
    if (ratio) {
      domain_hi_ = equations::stable_convex_ratio_limit() - kRatioDomainMargin;
    }
  } else {
    rhs_ = 0.25;
    if (ratio) {
      domain_hi_ =
          equations::stable_univalent_ratio_limit() - kRatioDomainMargin;
    }
  }
}

double RadiusEquation::lhs(double r) const {
  namespace bounds = equations::bounds;
  const BohrPolynomial& p = problem_.poly;
  const bool ratio = std::holds_alternative<RatioArea>(problem_.variant);

  if (const auto* w = std::get_if<W0H>(&problem_.cls)) {
    std::optional<int> m;
    if (const auto* power = std::get_if<WithPowerTerm>(&problem_.variant)) {
      m = power->m();
    }
    return equations::w0h_extremal_lhs(r, w->alpha, p, m, eps_);
  }
  if (ratio) {
    if (!(r >= 0.0)) {
      throw std::domain_error("negative r");
    }
  } else {
    check_stable_radius(r);
  }
  if (std::holds_alternative<StableConvex>(problem_.cls)) {
    return bounds::convex_majorant(r) +
           p(ratio ? bounds::convex_ratio(r) : bounds::convex_area(r));
  }
  return bounds::univalent_majorant(r) +
         p(ratio ? bounds::univalent_ratio(r) : bounds::univalent_area(r));
}

std::int64_t RadiusEquation::terms_used(double r) const {
  const auto* w = std::get_if<W0H>(&problem_.cls);
  if (w == nullptr) {
    return 0;
  }
  std::int64_t terms =
      std::max(rhs_terms_, series::majorant_w0h(r, w->alpha, eps_).terms_used);
  if (!problem_.poly.is_zero()) {
    terms = std::max(terms,
                     series::area_ratio_w0h(r, w->alpha, eps_).terms_used);
  }
  return terms;
}

ScalarFunction RadiusEquation::as_function() const {
  return [eq = *this](double r) { return eq(r); };
}

RadiusResult solve_radius(const RadiusEquation& equation, double tol) {
  const ScalarFunction f = [&equation](double r) { return equation(r); };
  const Bracket bracket = solver::bracket_root(f, equation.domain_hi());
  return solver::refine_root(f, bracket, tol);
}

RadiusResult solve_radius(const RadiusProblem& problem, double tol) {
  return solve_radius(RadiusEquation(problem), tol);
}

}  // namespace bohr
