#ifndef BOHR_EQUATIONS_HPP
#define BOHR_EQUATIONS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bohr/series.hpp"

namespace bohr {

/// P(w) = lambda_1 w + ... + lambda_k w^k with lambda_j >= 0 and, when
/// non-empty, lambda_k > 0. The empty polynomial is P == 0.
class BohrPolynomial {
 public:
  BohrPolynomial() = default;

  /// Coefficients in order lambda_1, ..., lambda_k. Throws
  /// std::invalid_argument for negative or non-finite entries or a zero
  /// leading coefficient.
  explicit BohrPolynomial(std::vector<double> coefficients);

  /// w^k.
  static BohrPolynomial monomial(std::size_t k);

  std::span<const double> coefficients() const noexcept {
    return coefficients_;
  }
  std::size_t degree() const noexcept { return coefficients_.size(); }
  bool is_zero() const noexcept { return coefficients_.empty(); }

  /// Same as poly_eval(*this, w).
  double operator()(double w) const;

  friend bool operator==(const BohrPolynomial&,
                         const BohrPolynomial&) = default;

 private:
  std::vector<double> coefficients_;
};

/// Sum_j lambda_j w^j; 0 for P == 0. Throws std::domain_error for w < 0.
double poly_eval(const BohrPolynomial& p, double w);

struct W0H {
  Alpha alpha;
  friend bool operator==(const W0H&, const W0H&) = default;
};
struct StableConvex {
  friend bool operator==(StableConvex, StableConvex) = default;
};
struct StableUnivalent {
  friend bool operator==(StableUnivalent, StableUnivalent) = default;
};
using ClassSpec = std::variant<W0H, StableConvex, StableUnivalent>;

/// M_f(r) + P(S_r / pi).
struct MajorantOnly {
  friend bool operator==(MajorantOnly, MajorantOnly) = default;
};

/// |f(z)|^m + sum_{n>=2} (|a_n| + |b_n|) r^n + P(S_r / pi); W0H only.
class WithPowerTerm {
 public:
  /// Throws std::invalid_argument for m < 0.
  explicit WithPowerTerm(int m);
  int m() const noexcept { return m_; }
  friend bool operator==(WithPowerTerm, WithPowerTerm) = default;

 private:
  int m_;
};

/// M_f(r) + P(S_r / (pi - S_r)); stable classes only.
struct RatioArea {
  friend bool operator==(RatioArea, RatioArea) = default;
};
using ProblemVariant = std::variant<MajorantOnly, WithPowerTerm, RatioArea>;

std::string to_string(const ClassSpec& cls);
std::string to_string(const ProblemVariant& variant);

namespace equations {

// ---- W0H(alpha) -----------------------------------------------------------
//
// Both functions require 0 <= r <= series::kMaxRadius and are negative below
// the Bohr radius, positive above it.

/// Extremal left-hand side for W0H(alpha): M(r) + P(S_r/pi) when power_m is
/// empty, M(r)^m + (M(r) - r) + P(S_r/pi) otherwise.
double w0h_extremal_lhs(double r, Alpha alpha, const BohrPolynomial& p,
                        std::optional<int> power_m,
                        double eps = series::kDefaultEps);

/// J1(r) = M(r) + P(S_r/pi) - d(alpha), with M the extremal majorant,
/// S_r/pi the extremal area ratio and d the boundary distance of f_alpha.
double eval_j1(double r, Alpha alpha, const BohrPolynomial& p,
               double eps = series::kDefaultEps);

/// J2(r) = M(r)^m + (M(r) - r) + P(S_r/pi) - d(alpha). For m = 0 the power
/// term is 1, and J2 has no zero on [0, 1).
double eval_j2(double r, Alpha alpha, const BohrPolynomial& p, int m,
               double eps = series::kDefaultEps);

// ---- alpha = 1/2 closed forms, r in (0, 1) ---------------------------------

/// F(r) as printed for the P(w) = w problem at alpha = 1/2, with the
/// additive constant 29 + 8 log 2. Throws std::domain_error outside (0, 1).
double eval_f_literal(double r);

/// The same closed form with the constant 41 - 8 log 2 that follows from
/// summing the alpha = 1/2 series against d = 8 log 2 - 5. Its zero is the
/// zero of eval_j1(., 1/2, w).
double eval_f_corrected(double r);

/// T(r) for the m = 1, P(w) = w problem at alpha = 1/2.
double eval_t_literal(double r);

// ---- stable harmonic classes -----------------------------------------------

/// r / (1 - r) + P(r^2 / (1 - r^2)^2) - 1/2 on [0, kMaxRadius].
double eval_stable_convex(double r, const BohrPolynomial& p);

/// r / (1 - r)^2 + P((r^6 + 4r^4 + r^2) / (1 - r^2)^4) - 1/4 on
/// [0, kMaxRadius].
double eval_stable_univalent(double r, const BohrPolynomial& p);

/// r / (1 - r) + P(r^2 / ((1 - r^2)^2 - r^2)) - 1/2 for
/// 0 <= r < (sqrt 5 - 1) / 2.
double eval_stable_convex_ratio(double r, const BohrPolynomial& p);

/// r / (1 - r)^2 + P(u / ((1 - r^2)^4 - u)) - 1/4 with u = r^6 + 4r^4 + r^2,
/// for r below stable_univalent_ratio_limit().
double eval_stable_univalent_ratio(double r, const BohrPolynomial& p);

/// (sqrt 5 - 1) / 2, where (1 - r^2)^2 = r^2.
double stable_convex_ratio_limit();

/// The unique root in (0, 1) of (1 - r^2)^4 = r^6 + 4r^4 + r^2.
double stable_univalent_ratio_limit();

// Bound expressions shared by the equations above.
namespace bounds {

double convex_majorant(double r);     // r / (1 - r)
double univalent_majorant(double r);  // r / (1 - r)^2
double convex_area(double r);         // r^2 / (1 - r^2)^2
double univalent_area(double r);      // (r^6 + 4r^4 + r^2) / (1 - r^2)^4
double convex_ratio(double r);        // r^2 / ((1 - r^2)^2 - r^2)
double univalent_ratio(double r);     // u / ((1 - r^2)^4 - u)

}  // namespace bounds

}  // namespace equations
}  // namespace bohr

#endif  // BOHR_EQUATIONS_HPP
