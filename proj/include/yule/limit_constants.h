#pragma once

#include <cmath>

#include "yule/quadrature.h"

namespace yule {

/// Second Bernoulli polynomial B2(x) = x^2 - x + 1/6.
inline double bernoulli_b2(double x) { return x * x - x + 1.0 / 6.0; }

/// Prefactors of the Brownian-motion conditional standard deviations:
/// 1/sqrt(12) for the continuous-observation statistic, 1/4 for the
/// discrete-observation one.
struct BmPrefactors {
  double continuous;
  double discrete;
};
inline BmPrefactors bm_prefactors() {
  return {1.0 / std::sqrt(12.0), 0.25};
}

/// Proven positive lower bound for sigma_H^2, with alpha = 2H - 1.
inline double sigma_h_sq_lower_bound(double alpha) {
  return (1.0 - alpha) * (3.0 - alpha) / (24.0 * (alpha + 3.0));
}

/// R2(gamma) = (alpha(1-alpha)/2) * int_0^inf B2({x}) (gamma+x)^(alpha-2) dx,
/// the Euler-Maclaurin remainder entering the limiting variance.
/// Requires gamma in (0, 1), alpha in (0, 1).
double r2_remainder(double gamma, double alpha,
                    const QuadratureConfig& cfg = {});

/// Limiting variance sigma_H^2 via the variance-lemma route
///   alpha(alpha+1) * int_0^1 R(gamma) (1/2 - gamma) dgamma.
double sigma_h_sq_via_lemma(double hurst, const QuadratureConfig& cfg = {});

/// The same constant via the single simplified improper integral.
double sigma_h_sq_via_simplified(double hurst,
                                 const QuadratureConfig& cfg = {});

/// Discrete-observation constant sigma_H^d (the square root; see
/// LimitConstants::sigma_h_d_sq for the radicand).
double sigma_h_d(double hurst, const QuadratureConfig& cfg = {});

/// All H-dependent limit constants with their quadrature error estimates.
///
/// Note on reported magnitudes: the simplified-formula output is the
/// variance sigma_H^2 (0.0254852 at H = 0.75), while its square root
/// sigma_H is 0.159639; the lower bound already exceeds 0.025485^2, so the
/// two cannot be confused once computed. Likewise sigma_h_d_sq = 0.0209800
/// at H = 0.75 and sigma_h_d = 0.144845.
struct LimitConstants {
  double hurst = 0;
  double alpha = 0;        // 2H - 1
  double sigma_h_sq = 0;   // limiting variance, continuous statistic
  double sigma_h = 0;      // sqrt(sigma_h_sq)
  double sigma_h_d_sq = 0; // radicand of the discrete constant
  double sigma_h_d = 0;    // sqrt(sigma_h_d_sq)
  double lower_bound = 0;  // proven lower bound for sigma_h_sq
  double err_sq = 0;       // absolute error estimate for sigma_h_sq
  double err_d = 0;        // absolute error estimate for sigma_h_d_sq
};

LimitConstants compute_limit_constants(double hurst,
                                       const QuadratureConfig& cfg = {});

/// Per-H cache (read-only after first computation; guarded for concurrent
/// first writes). Uses the default QuadratureConfig.
const LimitConstants& limit_constants_cached(double hurst);

}  // namespace yule
