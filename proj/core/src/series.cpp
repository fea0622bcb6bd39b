#include "bohr/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bohr/specfun.hpp"

namespace bohr {

Alpha::Alpha(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error("alpha = " + std::to_string(alpha) +
                            " outside (0, 1]");
  }
}

namespace series {
namespace {

// Neumaier compensated sum; the majorant near r = 1 adds tens of millions
// of terms.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

constexpr int kEulerOrder = 12;
constexpr std::int64_t kMaxTerms = std::int64_t{1} << 36;

void check_radius(double r, const char* what) {
  if (!(r >= 0.0 && r <= kMaxRadius)) {
    throw std::domain_error(std::string(what) + ": r = " + std::to_string(r) +
                            " outside [0, 1 - 1e-6]");
  }
}

void check_eps(double eps) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("series tolerance eps must be positive");
  }
}

double denom_w0h(double n, double alpha) {
  return alpha * n * n + (1.0 - alpha) * n;
}

double coeff(std::int64_t n, double alpha) {
  return 2.0 / denom_w0h(static_cast<double>(n), alpha);
}

// Sum of positive terms t_n = weight(n) * base^n for n = 2, 3, ... where
// weight is non-increasing in n, so t_{n+1}/t_n <= base and the tail after n
// is at most t_{n+1} / (1 - base). Stops when that bound is <= eps or when n
// reaches last_n.
template <class Weight>
SeriesEval sum_geometric_tail(Weight weight, double base, double eps,
                              std::int64_t last_n) {
  CompensatedSum sum;
  double power = base * base;
  std::int64_t n = 2;
  double bound = 0.0;
  for (;; ++n) {
    sum.add(weight(n) * power);
    power *= base;
    bound = weight(n + 1) * power / (1.0 - base);
    if (n >= last_n || bound <= eps) {
      break;
    }
    if (n >= kMaxTerms) {
      throw std::runtime_error("series did not reach requested tolerance");
    }
  }
  return {sum.value(), bound, n - 1};
}

SeriesEval majorant_impl(double r, Alpha alpha, double eps,
                         std::int64_t last_n) {
  if (r == 0.0) {
    return {0.0, 0.0, 0};
  }
  const double a = alpha.value();
  auto weight = [a](std::int64_t n) { return coeff(n, a); };
  SeriesEval tail = sum_geometric_tail(weight, r, eps, last_n);
  tail.value += r;
  return tail;
}

// 4 n / (alpha n^2 + (1-alpha) n)^2 = 4 / (n (alpha n + 1 - alpha)^2) is
// decreasing in n.
SeriesEval area_impl(double r, Alpha alpha, double eps, std::int64_t last_n) {
  if (r == 0.0) {
    return {0.0, 0.0, 0};
  }
  const double a = alpha.value();
  const double x = r * r;
  auto weight = [a](std::int64_t n) {
    const double dn = static_cast<double>(n);
    const double den = denom_w0h(dn, a);
    return 4.0 * dn / (den * den);
  };
  SeriesEval tail = sum_geometric_tail(weight, x, eps, last_n);
  tail.value += x;
  return tail;
}

// sup over [x, inf) of |d^k/dx^k 2 / (alpha x^2 + (1 - alpha) x)|.
double coeff_derivative_bound(double x, double alpha, int k) {
  const double k_fact = std::tgamma(k + 1.0);
  // 2 / (x (alpha x + beta)) <= 2 / (alpha x^2) termwise in the
  // partial-fraction expansion.
  double bound = 2.0 * (k + 1.0) * k_fact / (alpha * std::pow(x, k + 2.0));
  const double beta = 1.0 - alpha;
  if (beta > 0.0) {
    // f = (2/beta) (1/x - 1/(x + gamma)), gamma = beta / alpha.
    const double gamma = beta / alpha;
    const double shrink = -std::expm1(-(k + 1.0) * std::log1p(gamma / x));
    bound = std::min(bound,
                     (2.0 / beta) * k_fact * std::pow(x, -(k + 1.0)) * shrink);
  }
  return bound * (1.0 + 1e-12);
}

SeriesEval distance_impl(Alpha alpha, std::int64_t last_n) {
  const double a = alpha.value();
  CompensatedSum sum;
  sum.add(1.0);
  for (std::int64_t n = 2; n <= last_n; ++n) {
    const double t = coeff(n, a);
    sum.add((n % 2 == 0) ? -t : t);
  }

  // Tail sum_{n>N} (-1)^{n-1} c_n = (-1)^N T with T = a_0 - a_1 + a_2 - ...
  // and a_j = c_{N+1+j}. Euler: T = sum_{k<K} D^k a_0 / 2^{k+1} + R with
  // 0 <= R <= D^K a_0 / 2^K.
  std::array<double, kEulerOrder + 1> diffs{};
  for (int j = 0; j <= kEulerOrder; ++j) {
    diffs[j] = coeff(last_n + 1 + j, a);
  }
  const double first_omitted = diffs[0];
  double estimate = 0.0;
  double scale = 0.5;
  for (int k = 0; k < kEulerOrder; ++k) {
    estimate += diffs[0] * scale;
    scale *= 0.5;
    for (int j = 0; j + 1 <= kEulerOrder - k; ++j) {
      diffs[j] -= diffs[j + 1];
    }
  }
  const double remainder =
      coeff_derivative_bound(static_cast<double>(last_n + 1), a, kEulerOrder) *
      std::ldexp(1.0, -kEulerOrder);

  const double sign = (last_n % 2 == 0) ? 1.0 : -1.0;
  const std::int64_t terms = last_n - 1 + kEulerOrder + 1;
  // Report the midpoint of the enclosing interval with its full width as the
  // bound, so a finer cutoff never moves the value by more than the bound.
  if (remainder < first_omitted) {
    return {sum.value() + sign * (estimate + 0.5 * remainder), remainder,
            terms};
  }
  return {sum.value() + sign * 0.5 * first_omitted, first_omitted, last_n - 1};
}

}  // namespace

double coeff_w0h(std::int64_t n, Alpha alpha) {
  if (n < 2) {
    throw std::domain_error("coeff_w0h: n = " + std::to_string(n) +
                            " must be at least 2");
  }
  return coeff(n, alpha.value());
}

SeriesEval majorant_w0h(double r, Alpha alpha, double eps) {
  check_radius(r, "majorant_w0h");
  check_eps(eps);
  return majorant_impl(r, alpha, eps, kMaxTerms);
}

SeriesEval majorant_w0h_partial(double r, Alpha alpha, std::int64_t last_n) {
  check_radius(r, "majorant_w0h_partial");
  if (last_n < 2) {
    throw std::domain_error("majorant_w0h_partial: last_n must be >= 2");
  }
  return majorant_impl(r, alpha, 0.0, last_n);
}

SeriesEval distance_w0h(Alpha alpha, double eps) {
  check_eps(eps);
  for (std::int64_t last_n = 16;; last_n *= 2) {
    SeriesEval d = distance_impl(alpha, last_n);
    if (d.tail_bound <= eps) {
      return d;
    }
    if (last_n >= kMaxTerms) {
      throw std::runtime_error("distance_w0h did not reach tolerance");
    }
  }
}

SeriesEval distance_w0h_partial(Alpha alpha, std::int64_t last_n) {
  if (last_n < 2) {
    throw std::domain_error("distance_w0h_partial: last_n must be >= 2");
  }
  return distance_impl(alpha, last_n);
}

SeriesEval area_ratio_w0h(double r, Alpha alpha, double eps) {
  check_radius(r, "area_ratio_w0h");
  check_eps(eps);
  return area_impl(r, alpha, eps, kMaxTerms);
}

SeriesEval area_ratio_w0h_partial(double r, Alpha alpha, std::int64_t last_n) {
  check_radius(r, "area_ratio_w0h_partial");
  if (last_n < 2) {
    throw std::domain_error("area_ratio_w0h_partial: last_n must be >= 2");
  }
  return area_impl(r, alpha, 0.0, last_n);
}

namespace {

void check_unit_interval(double r, const char* what) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::domain_error(std::string(what) + ": r = " + std::to_string(r) +
                            " outside [0, 1)");
  }
}

}  // namespace

double majorant_tail_closed_half(double r) {
  check_unit_interval(r, "majorant_tail_closed_half");
  if (r < kClosedFormSwitch) {
    return majorant_impl(r, Alpha(0.5), 1e-18, kMaxTerms).value - r;
  }
  return 4.0 - 2.0 * r + (4.0 / r) * (1.0 - r) * specfun::log1m(r);
}

double area_tail_closed_half(double r) {
  check_unit_interval(r, "area_tail_closed_half");
  if (r < kClosedFormSwitch) {
    return area_impl(r, Alpha(0.5), 1e-18, kMaxTerms).value - r * r;
  }
  const double x = r * r;
  return -4.0 * x + (16.0 / x) * (1.0 - x) * specfun::log1m(x) -
         (16.0 / x) * specfun::li2(x) + 32.0;
}

double distance_closed_half() { return 8.0 * std::numbers::ln2 - 5.0; }

}  // namespace series
}  // namespace bohr
