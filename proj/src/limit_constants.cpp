#include "yule/limit_constants.h"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "yule/errors.h"

namespace yule {

namespace {

void check_hurst(double hurst) {
  if (!(hurst > 0.5 && hurst < 1.0))
    throw ValueError("Hurst parameter must lie in (1/2, 1), got " +
                     std::to_string(hurst));
}

// int_0^1 x^p B2(x) dx for p > -1.
double monomial_b2_moment(double p) {
  return 1.0 / (p + 3.0) - 1.0 / (p + 2.0) + 1.0 / (6.0 * (p + 1.0));
}

// Antiderivative bracket for int B2(u) (c+u)^(a-2) du over one unit interval,
// from expanding B2(u) in powers of y = c + u.
double unit_interval_closed(double c, double a, double y) {
  return std::pow(y, a + 1.0) / (a + 1.0) -
         (1.0 + 2.0 * c) * std::pow(y, a) / a +
         (c * c + c + 1.0 / 6.0) * std::pow(y, a - 1.0) / (a - 1.0);
}

// Head interval [0,1] of int B2(x)(g+x)^(a-2) dx with the g^(a-1)/(6(a-1))
// endpoint term cancelled analytically, so the result stays finite as g -> 0.
double head_regularized(double g, double a) {
  const double upper = unit_interval_closed(g, a, 1.0 + g);
  const double lower =
      std::pow(g, a + 1.0) / (a + 1.0) -
      (1.0 + 2.0 * g) * std::pow(g, a) / a +
      (std::pow(g, a + 1.0) + std::pow(g, a)) / (a - 1.0);
  return upper - lower;
}

// Unit intervals beyond the cutoff contribute at most this much: B2 has zero
// mean per period, so each interval is controlled by the second derivative
// of the kernel (double integration by parts against u^2(1-u)^2/12).
double jreg_tail_bound(double g, double a, std::int64_t n_intervals) {
  return (2.0 - a) *
         std::pow(g + static_cast<double>(n_intervals) - 1.0, a - 3.0) / 360.0;
}

struct JregResult {
  double value;
  double error;
};

// Regularized improper integral
//   jreg(g) = int_0^inf B2({x}) (g+x)^(a-2) dx - g^(a-1)/(6(1-a)),
// continuous on g >= 0. Head interval in closed form; intervals [j, j+1]
// with fixed 32-point Gauss-Legendre panels (the integrand is analytic
// there); tail cut once the analytic bound drops below tol/2.
JregResult jreg(double g, double a, double tol, int max_intervals) {
  double value = head_regularized(g, a);
  double err = 0.0;
  std::int64_t j = 1;
  for (;; ++j) {
    if (j > max_intervals)
      throw QuadratureError("improper-integral cutoff exceeds interval limit");
    const double lo = static_cast<double>(j);
    const QuadratureResult panel = gauss_panel(
        [g, a, lo](double x) {
          return bernoulli_b2(x - lo) * std::pow(g + x, a - 2.0);
        },
        lo, lo + 1.0);
    value += panel.value;
    err += panel.error;
    if (jreg_tail_bound(g, a, j + 1) <= 0.5 * tol) break;
  }
  return {value, err + jreg_tail_bound(g, a, j + 1)};
}

// R(gamma) of the limiting-variance integrand, in the regularized form
// where the gamma^(alpha-1) singularities have cancelled exactly.
double r_kernel(double g, double a, double tol, int max_intervals) {
  const double base =
      -std::pow(g, a + 1.0) / (a * (1.0 + a)) + std::pow(g, a) / (2.0 * a);
  return base + 0.5 * (1.0 - a) * jreg(g, a, tol, max_intervals).value;
}

// Discrete-observation kernel R_H^d(gamma); equals -2 R(gamma) after the
// same regularization.
double rhd_kernel(double g, double a, double tol, int max_intervals) {
  const double base =
      2.0 * std::pow(g, a + 1.0) / (a * (a + 1.0)) - std::pow(g, a) / a;
  return base - (1.0 - a) * jreg(g, a, tol, max_intervals).value;
}

}  // namespace

double r2_remainder(double gamma, double alpha, const QuadratureConfig& cfg) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw ValueError("gamma must lie in (0, 1)");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ValueError("alpha must lie in (0, 1)");
  const JregResult j = jreg(gamma, alpha, cfg.abs_tol, cfg.max_subdivisions);
  if (j.error > cfg.abs_tol)
    throw QuadratureError("R2 tolerance not reached");
  const double full =
      j.value + std::pow(gamma, alpha - 1.0) / (6.0 * (1.0 - alpha));
  return 0.5 * alpha * (1.0 - alpha) * full;
}

double sigma_h_sq_via_lemma(double hurst, const QuadratureConfig& cfg) {
  check_hurst(hurst);
  const double a = 2.0 * hurst - 1.0;
  const double inv_a = 1.0 / a;
  const double inner_tol = cfg.abs_tol / 16.0;
  // substitute gamma = u^(1/alpha): the remaining integrand is continuous
  // with an algebraic endpoint at u = 0 that adaptive bisection resolves
  const auto integrand = [&](double u) {
    if (u <= 0.0) return 0.0;
    const double g = std::pow(u, inv_a);
    return r_kernel(g, a, inner_tol, cfg.max_subdivisions) * (0.5 - g) *
           inv_a * std::pow(u, inv_a - 1.0);
  };
  const QuadratureResult outer = integrate_adaptive(
      integrand, 0.0, 1.0, cfg.abs_tol / 4.0, cfg.max_subdivisions);
  return a * (a + 1.0) * outer.value;
}

double sigma_h_sq_via_simplified(double hurst, const QuadratureConfig& cfg) {
  check_hurst(hurst);
  const double a = 2.0 * hurst - 1.0;
  const double scale = a * (a + 1.0) / 4.0;
  const double budget = cfg.abs_tol / scale;

  // head interval: the x^a and x^(a-1) pieces have exact moments against
  // B2; the shifted pieces are smooth and take a single panel
  const QuadratureResult head_smooth = gauss_panel(
      [a](double x) {
        return (-2.0 * std::pow(x + 1.0, a) / a + std::pow(x + 1.0, a - 1.0)) *
               bernoulli_b2(x);
      },
      0.0, 1.0);
  double total = (2.0 / a) * monomial_b2_moment(a) +
                 monomial_b2_moment(a - 1.0) + head_smooth.value;
  double err = head_smooth.error;

  const auto bracket = [a](double x) {
    return 2.0 * std::pow(x, a) / a - 2.0 * std::pow(x + 1.0, a) / a +
           std::pow(x, a - 1.0) + std::pow(x + 1.0, a - 1.0);
  };
  const double tail_coef = (1.0 - a) * (2.0 - a) * (3.0 - a) / 2160.0;
  std::int64_t j = 1;
  for (;; ++j) {
    if (j > cfg.max_subdivisions)
      throw QuadratureError("improper-integral cutoff exceeds interval limit");
    const double lo = static_cast<double>(j);
    const QuadratureResult panel = gauss_panel(
        [&bracket, lo](double x) { return bracket(x) * bernoulli_b2(x - lo); },
        lo, lo + 1.0);
    total += panel.value;
    err += panel.error;
    if (tail_coef * std::pow(static_cast<double>(j), a - 4.0) <= 0.5 * budget)
      break;
  }
  err += tail_coef * std::pow(static_cast<double>(j), a - 4.0);
  if (err > budget) throw QuadratureError("tolerance not reached");
  return scale * total + sigma_h_sq_lower_bound(a);
}

namespace {

struct SigmaHdSq {
  double value;
  double error;
};

SigmaHdSq sigma_h_d_sq_impl(double hurst, const QuadratureConfig& cfg) {
  check_hurst(hurst);
  const double a = 2.0 * hurst - 1.0;
  const double inv_a = 1.0 / a;
  const double inner_tol = cfg.abs_tol / 16.0;
  const auto integrand = [&](double u) {
    if (u <= 0.0) return 0.0;
    const double g = std::pow(u, inv_a);
    const double diff = rhd_kernel(g + 0.5, a, inner_tol, cfg.max_subdivisions) -
                        rhd_kernel(g, a, inner_tol, cfg.max_subdivisions);
    return diff * inv_a * std::pow(u, inv_a - 1.0);
  };
  const double upper = std::pow(0.5, a);
  const QuadratureResult outer = integrate_adaptive(
      integrand, 0.0, upper, cfg.abs_tol / 4.0, cfg.max_subdivisions);
  // H(2H-1)/4 = a(a+1)/8
  const double scale = a * (a + 1.0) / 8.0;
  return {scale * outer.value,
          scale * outer.error + inner_tol};
}

}  // namespace

double sigma_h_d(double hurst, const QuadratureConfig& cfg) {
  const SigmaHdSq sq = sigma_h_d_sq_impl(hurst, cfg);
  if (sq.value < -cfg.abs_tol)
    throw NegativeRadicand("discrete constant radicand is negative");
  return std::sqrt(std::max(sq.value, 0.0));
}

LimitConstants compute_limit_constants(double hurst,
                                       const QuadratureConfig& cfg) {
  check_hurst(hurst);
  LimitConstants c;
  c.hurst = hurst;
  c.alpha = 2.0 * hurst - 1.0;
  c.lower_bound = sigma_h_sq_lower_bound(c.alpha);
  c.sigma_h_sq = sigma_h_sq_via_simplified(hurst, cfg);
  c.err_sq = cfg.abs_tol;
  c.sigma_h = std::sqrt(c.sigma_h_sq);
  const SigmaHdSq sq = sigma_h_d_sq_impl(hurst, cfg);
  if (sq.value < -cfg.abs_tol)
    throw NegativeRadicand("discrete constant radicand is negative");
  c.sigma_h_d_sq = std::max(sq.value, 0.0);
  c.sigma_h_d = std::sqrt(c.sigma_h_d_sq);
  c.err_d = sq.error;
  if (c.sigma_h_sq < c.lower_bound)
    throw QuadratureError("computed variance violates its lower bound");
  return c;
}

const LimitConstants& limit_constants_cached(double hurst) {
  static std::mutex mutex;
  static std::map<double, LimitConstants> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(hurst);
  if (it == cache.end())
    it = cache.emplace(hurst, compute_limit_constants(hurst)).first;
  return it->second;
}

}  // namespace yule
