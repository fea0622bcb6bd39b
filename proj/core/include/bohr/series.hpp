#ifndef BOHR_SERIES_HPP
#define BOHR_SERIES_HPP

#include <cstdint>

namespace bohr {

/// A truncated series value. The exact sum lies in
/// [value - tail_bound, value + tail_bound].
struct SeriesEval {
  double value = 0.0;
  double tail_bound = 0.0;
  std::int64_t terms_used = 0;
};

/// Class parameter of W0H(alpha); restricted to 0 < alpha <= 1.
class Alpha {
 public:
  /// Throws std::domain_error unless 0 < alpha <= 1.
  explicit Alpha(double alpha);

  double value() const noexcept { return alpha_; }

  friend bool operator==(Alpha, Alpha) = default;

 private:
  double alpha_;
};

namespace series {

inline constexpr double kDefaultEps = 1e-13;

/// Largest radius accepted by the truncated-series evaluators.
inline constexpr double kMaxRadius = 1.0 - 1e-6;

/// Sharp coefficient bound |a_n| + |b_n| <= 2 / (alpha n^2 + (1 - alpha) n)
/// for W0H(alpha); also the coefficients of the extremal map f_alpha.
/// Throws std::domain_error for n < 2.
double coeff_w0h(std::int64_t n, Alpha alpha);

/// r + sum_{n>=2} c_n(alpha) r^n, summed until the geometric tail bound
/// c_{N+1} r^{N+1} / (1 - r) drops to eps. Requires 0 <= r <= kMaxRadius.
SeriesEval majorant_w0h(double r, Alpha alpha, double eps = kDefaultEps);

/// Same series with a fixed cutoff: terms n = 2..last_n.
SeriesEval majorant_w0h_partial(double r, Alpha alpha, std::int64_t last_n);

/// Boundary distance of f_alpha: 1 + sum_{n>=2} (-1)^{n-1} c_n(alpha).
///
/// The terms after the cutoff are estimated with an Euler transform of fixed
/// order. Because c_n is completely monotone in n, the transform's remainder
/// is bounded by the K-th derivative of 2/(alpha x^2 + (1-alpha) x), which
/// gives a rigorous tail_bound that is also below the first omitted term.
SeriesEval distance_w0h(Alpha alpha, double eps = kDefaultEps);

/// Distance series with terms n = 2..last_n summed directly, then the
/// Euler-transformed tail. last_n must be at least 2.
SeriesEval distance_w0h_partial(Alpha alpha, std::int64_t last_n);

/// S_r / pi for f_alpha: r^2 + sum_{n>=2} 4 n r^{2n} / (alpha n^2 + (1-alpha) n)^2.
/// Requires 0 <= r <= kMaxRadius.
SeriesEval area_ratio_w0h(double r, Alpha alpha, double eps = kDefaultEps);

SeriesEval area_ratio_w0h_partial(double r, Alpha alpha, std::int64_t last_n);

// Closed forms of the alpha = 1/2 series. Below kClosedFormSwitch the
// removable singularity at r = 0 is avoided by summing directly.

inline constexpr double kClosedFormSwitch = 0.05;

/// sum_{n>=2} 4 r^n / (n^2 + n) = 4 - 2r + (4/r)(1 - r) log(1 - r), r in [0, 1).
double majorant_tail_closed_half(double r);

/// sum_{n>=2} 16 n r^{2n} / (n^2 + n)^2
///   = -4r^2 + (16/r^2)(1 - r^2) log(1 - r^2) - (16/r^2) Li2(r^2) + 32.
double area_tail_closed_half(double r);

/// 1 + sum_{n>=2} 4 (-1)^{n-1} / (n^2 + n) = 8 log 2 - 5.
double distance_closed_half();

}  // namespace series
}  // namespace bohr

#endif  // BOHR_SERIES_HPP
