#include "bohr/equations.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "bohr/specfun.hpp"

namespace bohr {

BohrPolynomial::BohrPolynomial(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {
  for (std::size_t j = 0; j < coefficients_.size(); ++j) {
    const double c = coefficients_[j];
    if (!std::isfinite(c) || c < 0.0) {
      throw std::invalid_argument("polynomial coefficient lambda_" +
                                  std::to_string(j + 1) +
                                  " must be finite and non-negative");
    }
  }
  if (!coefficients_.empty() && coefficients_.back() == 0.0) {
    throw std::invalid_argument(
        "polynomial leading coefficient lambda_" +
        std::to_string(coefficients_.size()) + " must be positive");
  }
}

BohrPolynomial BohrPolynomial::monomial(std::size_t k) {
  if (k == 0) {
    return {};
  }
  std::vector<double> c(k, 0.0);
  c.back() = 1.0;
  return BohrPolynomial(std::move(c));
}

double BohrPolynomial::operator()(double w) const { return poly_eval(*this, w); }

double poly_eval(const BohrPolynomial& p, double w) {
  if (!(w >= 0.0)) {
    throw std::domain_error("poly_eval: argument w = " + std::to_string(w) +
                            " must be non-negative");
  }
  const auto c = p.coefficients();
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * w + *it;
  }
  return acc * w;
}

WithPowerTerm::WithPowerTerm(int m) : m_(m) {
  if (m < 0) {
    throw std::invalid_argument("power term exponent m = " +
                                std::to_string(m) + " must be >= 0");
  }
}

namespace {
template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;
}  // namespace

std::string to_string(const ClassSpec& cls) {
  return std::visit(Overloaded{
                        [](const W0H&) { return std::string("w0h"); },
                        [](StableConvex) { return std::string("stable-convex"); },
                        [](StableUnivalent) {
                          return std::string("stable-univalent");
                        },
                    },
                    cls);
}

std::string to_string(const ProblemVariant& variant) {
  return std::visit(Overloaded{
                        [](MajorantOnly) { return std::string("majorant"); },
                        [](WithPowerTerm w) {
                          return "power:" + std::to_string(w.m());
                        },
                        [](RatioArea) { return std::string("ratio"); },
                    },
                    variant);
}

namespace equations {
namespace {

void check_open_unit(double r, const char* what) {
  if (!(r > 0.0 && r < 1.0)) {
    throw std::domain_error(std::string(what) + ": r = " + std::to_string(r) +
                            " outside (0, 1)");
  }
}

void check_stable_radius(double r, const char* what) {
  if (!(r >= 0.0 && r <= series::kMaxRadius)) {
    throw std::domain_error(std::string(what) + ": r = " + std::to_string(r) +
                            " outside [0, 1 - 1e-6]");
  }
}

double univalent_numerator(double r) {
  const double x = r * r;
  return x * (x * x + 4.0 * x + 1.0);
}

double convex_ratio_denominator(double r) {
  const double s = 1.0 - r * r;
  return s * s - r * r;
}

double univalent_ratio_denominator(double r) {
  const double s = 1.0 - r * r;
  const double s2 = s * s;
  return s2 * s2 - univalent_numerator(r);
}

// Shared by the three alpha = 1/2 closed forms:
// (k/r)(1-r) log(1-r) + (16/r^2)(1-r^2) log(1-r^2) - (16/r^2) Li2(r^2)
//   - 3r^2 - j r + constant.
double closed_form_half(double r, double log_coeff, double linear_coeff,
                        double constant) {
  const double x = r * r;
  return (log_coeff / r) * (1.0 - r) * specfun::log1m(r) +
         (16.0 / x) * (1.0 - x) * specfun::log1m(x) -
         (16.0 / x) * specfun::li2(x) - 3.0 * x - linear_coeff * r + constant;
}

}  // namespace

double w0h_extremal_lhs(double r, Alpha alpha, const BohrPolynomial& p,
                        std::optional<int> power_m, double eps) {
  const double majorant = series::majorant_w0h(r, alpha, eps).value;
  const double area_term =
      p.is_zero() ? 0.0 : p(series::area_ratio_w0h(r, alpha, eps).value);
  if (!power_m) {
    return majorant + area_term;
  }
  if (*power_m < 0) {
    throw std::invalid_argument("power term exponent m must be >= 0");
  }
  const double power = std::pow(majorant, *power_m);
  return power + (majorant - r) + area_term;
}

double eval_j1(double r, Alpha alpha, const BohrPolynomial& p, double eps) {
  const double lhs = w0h_extremal_lhs(r, alpha, p, std::nullopt, eps);
  return lhs - series::distance_w0h(alpha, eps).value;
}

double eval_j2(double r, Alpha alpha, const BohrPolynomial& p, int m,
               double eps) {
  const double lhs = w0h_extremal_lhs(r, alpha, p, m, eps);
  return lhs - series::distance_w0h(alpha, eps).value;
}

double eval_f_literal(double r) {
  check_open_unit(r, "eval_f_literal");
  return closed_form_half(r, 4.0, 1.0, 29.0 + 8.0 * std::numbers::ln2);
}

double eval_f_corrected(double r) {
  check_open_unit(r, "eval_f_corrected");
  return closed_form_half(r, 4.0, 1.0, 41.0 - 8.0 * std::numbers::ln2);
}

double eval_t_literal(double r) {
  check_open_unit(r, "eval_t_literal");
  return closed_form_half(r, 8.0, 3.0, 45.0 - 8.0 * std::numbers::ln2);
}

namespace bounds {

double convex_majorant(double r) { return r / (1.0 - r); }

double univalent_majorant(double r) {
  const double s = 1.0 - r;
  return r / (s * s);
}

double convex_area(double r) {
  const double s = 1.0 - r * r;
  return r * r / (s * s);
}

double univalent_area(double r) {
  const double s = 1.0 - r * r;
  const double s2 = s * s;
  return univalent_numerator(r) / (s2 * s2);
}

double convex_ratio(double r) {
  const double den = convex_ratio_denominator(r);
  if (!(den > 0.0)) {
    throw std::domain_error("stable convex ratio bound: (1 - r^2)^2 <= r^2 at r = " +
                            std::to_string(r));
  }
  return r * r / den;
}

double univalent_ratio(double r) {
  const double den = univalent_ratio_denominator(r);
  if (!(den > 0.0)) {
    throw std::domain_error(
        "stable univalent ratio bound: (1 - r^2)^4 <= r^6 + 4r^4 + r^2 at r = " +
        std::to_string(r));
  }
  return univalent_numerator(r) / den;
}

}  // namespace bounds

double eval_stable_convex(double r, const BohrPolynomial& p) {
  check_stable_radius(r, "eval_stable_convex");
  return bounds::convex_majorant(r) + p(bounds::convex_area(r)) - 0.5;
}

double eval_stable_univalent(double r, const BohrPolynomial& p) {
  check_stable_radius(r, "eval_stable_univalent");
  return bounds::univalent_majorant(r) + p(bounds::univalent_area(r)) - 0.25;
}

double eval_stable_convex_ratio(double r, const BohrPolynomial& p) {
  if (!(r >= 0.0)) {
    throw std::domain_error("eval_stable_convex_ratio: negative r");
  }
  return bounds::convex_majorant(r) + p(bounds::convex_ratio(r)) - 0.5;
}

double eval_stable_univalent_ratio(double r, const BohrPolynomial& p) {
  if (!(r >= 0.0)) {
    throw std::domain_error("eval_stable_univalent_ratio: negative r");
  }
  return bounds::univalent_majorant(r) + p(bounds::univalent_ratio(r)) - 0.25;
}

double stable_convex_ratio_limit() { return (std::sqrt(5.0) - 1.0) / 2.0; }

double stable_univalent_ratio_limit() {
  // In x = r^2 the denominator (1-x)^4 - x(x^2 + 4x + 1) is strictly
  // decreasing on [0, 1], from 1 to -6.
  static const double limit = [] {
    auto den = [](double x) {
      const double s = 1.0 - x;
      return s * s * s * s - x * (x * x + 4.0 * x + 1.0);
    };
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
      const double mid = lo + 0.5 * (hi - lo);
      if (mid == lo || mid == hi) {
        break;
      }
      (den(mid) > 0.0 ? lo : hi) = mid;
    }
    return std::sqrt(lo);
  }();
  return limit;
}

}  // namespace equations
}  // namespace bohr
