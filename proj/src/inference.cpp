#include "yule/inference.h"

#include <cmath>
#include <limits>
#include <string>

#include "yule/normal.h"

namespace yule {

double p_value(double z) { return two_sided_p_value(z); }

namespace {

struct Scaling {
  double hi;  // multiplies rho_n - rho
  double lo;  // multiplies mu
};

Scaling scaling_for(const ModelSpec& model, std::int64_t n) {
  const auto nn = static_cast<double>(n);
  if (model.kind == ProcessKind::StandardBm) return {nn, 1.0};
  const double h = *model.hurst;
  return {std::pow(nn, h + 0.5), std::pow(nn, h - 0.5)};
}

TestReport assemble(const TestConfig& cfg, const ModelSpec& model, double rho,
                    double rho_n, double mu, double sigma,
                    const FunctionalTriple& reference,
                    const FunctionalTriple& coarse) {
  TestReport rep;
  rep.model = model;
  rep.mode = cfg.mode;
  rep.n = cfg.coarse_n;
  rep.null_r = cfg.null_r;
  rep.alpha_level = cfg.alpha_level;
  rep.rho = rho;
  rep.rho_n = rho_n;
  rep.mu = mu;
  rep.sigma = sigma;
  rep.reference_triple = reference;
  rep.coarse_triple = coarse;
  if (sigma == 0.0) {
    rep.outcome = TestOutcome::ZeroSigma;
    rep.z = std::numeric_limits<double>::quiet_NaN();
    rep.p_value = std::numeric_limits<double>::quiet_NaN();
    rep.reject = false;
    return rep;
  }
  const Scaling s = scaling_for(model, cfg.coarse_n);
  rep.z = (s.hi * (rho_n - rho) - s.lo * mu) / sigma;
  rep.p_value = p_value(rep.z);
  rep.reject = rep.p_value < cfg.alpha_level;
  return rep;
}

// Reduce the pair to the fine grid fine_factor * coarse_n, decimating a
// finer sample when it is a multiple.
SampledPathPair to_fine_grid(const SampledPathPair& pair,
                             const TestConfig& cfg) {
  const std::int64_t m = cfg.fine_factor * cfg.coarse_n;
  const std::int64_t have = pair.grid().n;
  if (have == m) return pair;
  if (have % m != 0)
    throw GridError("pair grid " + std::to_string(have) +
                    " is not a multiple of the fine grid " +
                    std::to_string(m));
  return decimate(pair, have / m);
}

TestReport continuous_statistic(const SampledPathPair& pair,
                                const TestConfig& cfg,
                                const LimitConstants* constants) {
  const SampledPathPair fine = to_fine_grid(pair, cfg);
  const FunctionalTriple tf = fine_triple(fine);
  const double rho = correlation(tf);
  const double mu = correlation_gradient(tf).dot(
      bias_components_continuous(fine));
  const double sigma = sigma_continuous(tf, cfg.null_r, pair.model, constants);
  const SampledPathPair coarse = decimate(fine, cfg.fine_factor);
  const FunctionalTriple tn = discrete_triple(coarse);
  const double rho_n = correlation(tn);
  return assemble(cfg, pair.model, rho, rho_n, mu, sigma, tf, tn);
}

TestReport discrete_statistic(const SampledPathPair& pair,
                              const TestConfig& cfg,
                              const LimitConstants* constants) {
  if (pair.grid().n != 2 * cfg.coarse_n)
    throw GridError("discrete statistic needs a pair sampled at exactly 2n");
  const FunctionalTriple t2n = discrete_triple(pair);
  const double rho_2n = correlation(t2n);
  const SampledPathPair half = decimate(pair, 2);
  const FunctionalTriple tn = discrete_triple(half);
  const double rho_n = correlation(tn);
  const double mu_n = correlation_gradient(tn).dot(
      bias_components_discrete(half));
  const double sigma_n = sigma_discrete(tn, cfg.null_r, pair.model, constants);
  return assemble(cfg, pair.model, rho_2n, rho_n, mu_n, sigma_n, t2n, tn);
}

void require_kind(const SampledPathPair& pair, ProcessKind kind) {
  if (pair.model.kind != kind)
    throw ValueError("statistic does not match the pair's model kind");
}

}  // namespace

TestReport z_continuous_bm(const SampledPathPair& pair,
                           const TestConfig& cfg) {
  require_kind(pair, ProcessKind::StandardBm);
  return continuous_statistic(pair, cfg, nullptr);
}

TestReport z_continuous_fbm(const SampledPathPair& pair, const TestConfig& cfg,
                            const LimitConstants& constants) {
  require_kind(pair, ProcessKind::FractionalBm);
  return continuous_statistic(pair, cfg, &constants);
}

TestReport z_discrete_bm(const SampledPathPair& pair, const TestConfig& cfg) {
  require_kind(pair, ProcessKind::StandardBm);
  return discrete_statistic(pair, cfg, nullptr);
}

TestReport z_discrete_fbm(const SampledPathPair& pair, const TestConfig& cfg,
                          const LimitConstants& constants) {
  require_kind(pair, ProcessKind::FractionalBm);
  return discrete_statistic(pair, cfg, &constants);
}

TestReport run_test(const SampledPathPair& pair, const TestConfig& cfg) {
  const LimitConstants* constants = nullptr;
  if (pair.model.kind == ProcessKind::FractionalBm) {
    validate(pair.model);
    constants = &limit_constants_cached(*pair.model.hurst);
  }
  if (cfg.mode == TestMode::ContinuousProxy)
    return continuous_statistic(pair, cfg, constants);
  return discrete_statistic(pair, cfg, constants);
}

}  // namespace yule
