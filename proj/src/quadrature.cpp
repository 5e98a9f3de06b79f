#include "yule/quadrature.h"

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "yule/errors.h"

namespace yule {

namespace {

template <int N>
struct GaussRule {
  std::array<double, N> nodes;    // on [-1, 1]
  std::array<double, N> weights;
};

// Nodes/weights by Newton iteration on the Legendre polynomial; the usual
// cosine initial guess converges in a handful of steps.
template <int N>
GaussRule<N> make_rule() {
  GaussRule<N> rule{};
  const double pi = std::acos(-1.0);
  for (int i = 0; i < N; ++i) {
    double x = std::cos(pi * (i + 0.75) / (N + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= N; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = N * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule<16>& rule16() {
  static const GaussRule<16> r = make_rule<16>();
  return r;
}

const GaussRule<32>& rule32() {
  static const GaussRule<32> r = make_rule<32>();
  return r;
}

template <int N>
double apply(const GaussRule<N>& rule, const std::function<double(double)>& f,
             double a, double b) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (b + a);
  double acc = 0.0;
  for (int i = 0; i < N; ++i) acc += rule.weights[i] * f(c + h * rule.nodes[i]);
  return h * acc;
}

}  // namespace

double gauss16(const std::function<double(double)>& f, double a, double b) {
  return apply(rule16(), f, a, b);
}

double gauss32(const std::function<double(double)>& f, double a, double b) {
  return apply(rule32(), f, a, b);
}

QuadratureResult gauss_panel(const std::function<double(double)>& f, double a,
                             double b) {
  const double coarse = gauss16(f, a, b);
  const double fine = gauss32(f, a, b);
  return {fine, std::abs(fine - coarse)};
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    int max_subdivisions) {
  struct Panel {
    double a, b, value, error;
  };
  std::vector<Panel> stack;
  auto eval = [&f](double lo, double hi) {
    const QuadratureResult r = gauss_panel(f, lo, hi);
    return Panel{lo, hi, r.value, r.error};
  };
  stack.push_back(eval(a, b));
  double value = 0.0;
  double error = 0.0;
  int used = 1;
  const double length = b - a;
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    // local tolerance proportional to panel share of the interval
    const double local_tol = abs_tol * ((p.b - p.a) / length);
    const double width = p.b - p.a;
    if (p.error <= std::max(local_tol, 1e-18) ||
        width <= 1e-14 * std::max(1.0, std::abs(p.a))) {
      value += p.value;
      error += p.error;
      continue;
    }
    if (used + 2 > max_subdivisions)
      throw QuadratureError("adaptive quadrature: subdivision limit reached");
    const double mid = 0.5 * (p.a + p.b);
    stack.push_back(eval(p.a, mid));
    stack.push_back(eval(mid, p.b));
    used += 2;
  }
  return {value, error};
}

}  // namespace yule
