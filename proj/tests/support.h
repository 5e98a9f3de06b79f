#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "yule/grid.h"

namespace yule::testing {

/// Pair built from deterministic closed-form functions on a grid.
inline SampledPathPair pair_from_functions(std::int64_t n,
                                           double (*f)(double),
                                           double (*g)(double)) {
  SampledPathPair pair;
  pair.first.grid = UniformGrid{n};
  pair.second.grid = UniformGrid{n};
  pair.first.values.resize(n + 1);
  pair.second.values.resize(n + 1);
  for (std::int64_t k = 0; k <= n; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(n);
    pair.first.values(k) = f(t);
    pair.second.values(k) = g(t);
  }
  return pair;
}

/// Upper regularized incomplete gamma Q(a, x), for chi-square p-values.
inline double igamc(double a, double x) {
  if (x <= 0.0) return 1.0;
  const double lg = std::lgamma(a);
  if (x < a + 1.0) {
    // lower series, then complement
    double sum = 1.0 / a;
    double term = sum;
    for (int k = 1; k < 500; ++k) {
      term *= x / (a + k);
      sum += term;
      if (term < sum * 1e-16) break;
    }
    return 1.0 - sum * std::exp(-x + a * std::log(x) - lg);
  }
  // continued fraction (Lentz)
  double b = x + 1.0 - a;
  double c = 1e308;
  double d = 1.0 / b;
  double h = d;
  for (int k = 1; k < 500; ++k) {
    const double an = -k * (k - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::abs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - lg) * h;
}

/// Chi-square upper p-value with k degrees of freedom.
inline double chi2_p_value(double stat, int dof) {
  return igamc(0.5 * dof, 0.5 * stat);
}

}  // namespace yule::testing
