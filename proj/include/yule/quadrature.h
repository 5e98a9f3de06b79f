#pragma once

#include <functional>

namespace yule {

struct QuadratureConfig {
  double abs_tol = 1e-8;
  int max_subdivisions = 200000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // accumulated estimate, not a strict bound
};

/// Fixed-order Gauss-Legendre rules on [a, b].
double gauss16(const std::function<double(double)>& f, double a, double b);
double gauss32(const std::function<double(double)>& f, double a, double b);

/// One panel with an error estimate from the 16- vs 32-point difference.
QuadratureResult gauss_panel(const std::function<double(double)>& f, double a,
                             double b);

/// Adaptive bisection on [a, b] down to abs_tol. Throws QuadratureError if
/// the tolerance is unreachable within max_subdivisions panels.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    int max_subdivisions = 4000);

}  // namespace yule
