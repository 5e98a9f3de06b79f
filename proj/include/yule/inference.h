#pragma once

#include <cstdint>

#include "yule/functionals.h"
#include "yule/grid.h"

namespace yule {

enum class TestMode { ContinuousProxy, DiscreteOnly };

struct TestConfig {
  double null_r = 0.0;       // correlation under the null hypothesis
  double alpha_level = 0.05;
  TestMode mode = TestMode::ContinuousProxy;
  std::int64_t coarse_n = 2;
  std::int64_t fine_factor = 100;  // fine grid = fine_factor * coarse_n
};

enum class TestOutcome { Ok, ZeroSigma };

/// Standardized statistic with every intermediate surfaced, so a report can
/// be audited or recomputed from the raw pair.
struct TestReport {
  TestOutcome outcome = TestOutcome::Ok;
  double z = 0.0;
  double p_value = 0.0;  // two-sided normal
  bool reject = false;
  double rho = 0.0;    // fine-grid proxy, or the 2n-grid correlation
  double rho_n = 0.0;  // coarse-grid correlation
  double mu = 0.0;
  double sigma = 0.0;
  FunctionalTriple reference_triple;  // fine grid (or 2n grid)
  FunctionalTriple coarse_triple;     // n grid
  ModelSpec model;
  std::int64_t n = 0;
  TestMode mode = TestMode::ContinuousProxy;
  double null_r = 0.0;
  double alpha_level = 0.05;
};

double p_value(double z);

/// Continuous-proxy statistics: the pair must be sampled at
/// fine_factor * coarse_n (or a multiple; it is decimated down first).
///   Brownian:    z = (n (rho_n - rho) - mu) / sigma^r
///   fractional:  z = (n^(H+1/2) (rho_n - rho) - n^(H-1/2) mu) / sigma^(r,H)
TestReport z_continuous_bm(const SampledPathPair& pair, const TestConfig& cfg);
TestReport z_continuous_fbm(const SampledPathPair& pair, const TestConfig& cfg,
                            const LimitConstants& constants);

/// Discrete-observation statistics on a pair sampled at exactly 2n:
/// rho_2n from the full grid, rho_n / mu_n / sigma_n from the half grid.
TestReport z_discrete_bm(const SampledPathPair& pair, const TestConfig& cfg);
TestReport z_discrete_fbm(const SampledPathPair& pair, const TestConfig& cfg,
                          const LimitConstants& constants);

/// Dispatch on (cfg.mode, pair.model.kind); fetches cached limit constants
/// for fractional models.
TestReport run_test(const SampledPathPair& pair, const TestConfig& cfg);

}  // namespace yule
