#include "yule/functionals.h"

namespace yule {

FunctionalTriple discrete_triple(const SampledPathPair& pair) {
  const std::int64_t n = pair.grid().n;
  return triple_from_samples(pair.first.values.head(n),
                             pair.second.values.head(n));
}

FunctionalTriple fine_triple(const SampledPathPair& pair) {
  return discrete_triple(pair);
}

double correlation(const FunctionalTriple& t) {
  if (!(t.d1 > 0.0) || !(t.d2 > 0.0))
    throw DegeneratePath("correlation undefined: constant path on the grid");
  const double rho = t.a / std::sqrt(t.d1 * t.d2);
  if (std::abs(rho) > 1.0 + 1e-12)
    throw NegativeDiscriminant("covariance exceeds Cauchy-Schwarz bound");
  return std::clamp(rho, -1.0, 1.0);
}

Eigen::Vector3d correlation_gradient(const FunctionalTriple& t) {
  if (!(t.d1 > 0.0) || !(t.d2 > 0.0))
    throw DegeneratePath("gradient undefined: constant path on the grid");
  const double s = std::sqrt(t.d1 * t.d2);
  return {1.0 / s, -t.a / (2.0 * t.d1 * s), -t.a / (2.0 * t.d2 * s)};
}

Eigen::Vector3d bias_components_continuous(const SampledPathPair& pair) {
  const std::int64_t m = pair.grid().n;
  const double f1 = pair.first.at_one();
  const double g1 = pair.second.at_one();
  // left-Riemann means over k = 0..m-1, matching the summation convention
  const double fbar = stable_mean(pair.first.values.head(m));
  const double gbar = stable_mean(pair.second.values.head(m));
  return {0.5 * f1 * gbar + 0.5 * g1 * fbar - 0.5 * f1 * g1,
          f1 * fbar - 0.5 * f1 * f1, g1 * gbar - 0.5 * g1 * g1};
}

Eigen::Vector3d bias_components_discrete(const SampledPathPair& pair) {
  const std::int64_t n = pair.grid().n;
  const auto nn = static_cast<double>(n);
  const double f1 = pair.first.at_one();
  const double g1 = pair.second.at_one();
  const double sf = stable_sum(pair.first.values.head(n));
  const double sg = stable_sum(pair.second.values.head(n));
  return {f1 * sg / (4.0 * nn) + g1 * sf / (4.0 * nn) - 0.25 * f1 * g1,
          f1 * sf / (2.0 * nn) - 0.25 * f1 * f1,
          g1 * sg / (2.0 * nn) - 0.25 * g1 * g1};
}

BiasVector bias_vector_continuous(const SampledPathPair& pair) {
  BiasVector b;
  b.v = bias_components_continuous(pair);
  b.mu_scalar = correlation_gradient(fine_triple(pair)).dot(b.v);
  return b;
}

BiasVector bias_vector_discrete(const SampledPathPair& pair) {
  BiasVector b;
  b.v = bias_components_discrete(pair);
  b.mu_scalar = correlation_gradient(discrete_triple(pair)).dot(b.v);
  return b;
}

namespace {

double clamp_bracket(double b, const char* what) {
  if (b >= 0.0) return b;
  if (b > -1e-12) return 0.0;
  throw NegativeDiscriminant(std::string(what) +
                             " bracket is negative beyond tolerance");
}

double sigma_impl(const FunctionalTriple& t, double r, double prefactor) {
  if (!(std::abs(r) <= 1.0)) throw InvalidR("r must lie in [-1, 1]");
  if (!(t.d1 > 0.0) || !(t.d2 > 0.0))
    throw DegeneratePath("sigma undefined: constant path on the grid");
  const double b1 = clamp_bracket(t.d1 * t.d2 - t.a * t.a, "cross-variance");
  const double b2 = clamp_bracket(t.d1 + t.d2 - 2.0 * r * t.a, "sum-variance");
  return prefactor * std::sqrt(b1 * b2) / (t.d1 * t.d2);
}

double prefactor_for(const ModelSpec& model, const LimitConstants* constants,
                     bool continuous) {
  if (model.kind == ProcessKind::StandardBm)
    return continuous ? bm_prefactors().continuous : bm_prefactors().discrete;
  if (constants == nullptr)
    throw ValueError("fractional model requires limit constants");
  return continuous ? constants->sigma_h : constants->sigma_h_d;
}

}  // namespace

double sigma_continuous(const FunctionalTriple& t, double r,
                        const ModelSpec& model,
                        const LimitConstants* constants) {
  return sigma_impl(t, r, prefactor_for(model, constants, true));
}

double sigma_discrete(const FunctionalTriple& t, double r,
                      const ModelSpec& model, const LimitConstants* constants) {
  return sigma_impl(t, r, prefactor_for(model, constants, false));
}

}  // namespace yule
