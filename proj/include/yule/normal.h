#pragma once

namespace yule {

/// Standard normal CDF, accurate to ~1e-16 including far tails.
double norm_cdf(double z);

/// Standard normal quantile (inverse CDF), Wichura's PPND16 algorithm.
/// Requires p in (0, 1).
double norm_ppf(double p);

/// Two-sided normal p-value 2*(1 - Phi(|z|)) = erfc(|z|/sqrt(2)).
double two_sided_p_value(double z);

}  // namespace yule
