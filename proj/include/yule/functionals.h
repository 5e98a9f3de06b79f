#pragma once

#include <Eigen/Core>
#include <cmath>

#include "yule/errors.h"
#include "yule/grid.h"
#include "yule/limit_constants.h"
#include "yule/summation.h"

namespace yule {

/// Empirical (covariance, variance, variance) of a path pair:
///   a  = mean(fg) - mean(f) mean(g)
///   d1 = mean(f^2) - mean(f)^2,   d2 likewise,
/// with means over the left endpoints k/n, k = 0..n-1.
template <typename Scalar>
struct TripleT {
  Scalar a = 0;
  Scalar d1 = 0;
  Scalar d2 = 0;
};

using FunctionalTriple = TripleT<double>;

/// Core summation kernel over the k = 0..n-1 sample range (pass .head(n)).
/// Two-pass centered form plus compensated accumulation: variances cannot
/// go negative beyond a few ulps even for n ~ 1e6.
template <typename Derived1, typename Derived2>
TripleT<typename Derived1::Scalar> triple_from_samples(
    const Eigen::DenseBase<Derived1>& f, const Eigen::DenseBase<Derived2>& g) {
  using Scalar = typename Derived1::Scalar;
  const Eigen::Index n = f.size();
  const Scalar fbar = stable_mean(f);
  const Scalar gbar = stable_mean(g);
  StableSum<Scalar> sa, s1, s2;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Scalar df = f(k) - fbar;
    const Scalar dg = g(k) - gbar;
    sa.add(df * dg);
    s1.add(df * df);
    s2.add(dg * dg);
  }
  const auto nn = static_cast<Scalar>(n);
  TripleT<Scalar> t{sa.value() / nn, s1.value() / nn, s2.value() / nn};
  if (t.d1 < 0) t.d1 = 0;
  if (t.d2 < 0) t.d2 = 0;
  return t;
}

/// Triple on the observation grid (the D_n/A_n sums at frequency n).
FunctionalTriple discrete_triple(const SampledPathPair& pair);

/// Same sums on a fine grid, serving as the continuous-time proxy for the
/// integral functionals D and A.
FunctionalTriple fine_triple(const SampledPathPair& pair);

/// rho = a / sqrt(d1 d2), clamped into [-1, 1] against roundoff.
/// Throws DegeneratePath when either variance vanishes.
double correlation(const FunctionalTriple& t);

/// Gradient of F(a,b,c) = a/sqrt(bc) at the triple (a, d1, d2).
Eigen::Vector3d correlation_gradient(const FunctionalTriple& t);

struct BiasVector {
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
  double mu_scalar = 0.0;
};

/// Three-component centering vector of the fine-grid (continuous-proxy)
/// fluctuation, built from the endpoint values f(1), g(1) and the
/// left-Riemann means of the paths.
Eigen::Vector3d bias_components_continuous(const SampledPathPair& pair);

/// Discrete-observation centering vector; prefactors 1/(4n), 1/(2n), 1/4.
Eigen::Vector3d bias_components_discrete(const SampledPathPair& pair);

/// Centering vector together with its scalar contraction
/// mu = grad F(triple) . v. Throws DegeneratePath if the triple degenerates.
BiasVector bias_vector_continuous(const SampledPathPair& pair);
BiasVector bias_vector_discrete(const SampledPathPair& pair);

/// Conditional standard deviation of the limiting fluctuation:
///   sigma = prefactor * sqrt((d1 d2 - a^2)(d1 + d2 - 2 r a)) / (d1 d2).
/// The continuous-observation prefactor is 1/sqrt(12) for Brownian paths
/// and sigma_H for fractional ones; the discrete-observation prefactor is
/// 1/4 respectively sigma_H^d. `constants` is required for fractional
/// models. Brackets in (-1e-12, 0) are clamped to zero; anything more
/// negative raises NegativeDiscriminant.
double sigma_continuous(const FunctionalTriple& t, double r,
                        const ModelSpec& model,
                        const LimitConstants* constants = nullptr);
double sigma_discrete(const FunctionalTriple& t, double r,
                      const ModelSpec& model,
                      const LimitConstants* constants = nullptr);

}  // namespace yule
