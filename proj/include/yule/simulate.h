#pragma once

#include <cstdint>

#include "yule/grid.h"

namespace yule {

/// Autocovariance of unit-step fractional Gaussian noise,
/// (|k+1|^2H - 2|k|^2H + |k-1|^2H) / 2. At H = 1/2 this is 1_{k=0}.
double fgn_autocov(double hurst, std::int64_t lag);

enum class SampleMethod { CirculantEmbedding, Cholesky, Auto };

struct GeneratorConfig {
  ModelSpec model;
  std::int64_t n_fine = 2;  // subintervals of the sample grid
  std::uint64_t seed = 0;
  SampleMethod method = SampleMethod::Auto;
};

/// Draws a correlated pair with the exact joint law of the model:
/// X2 = r X1 + sqrt(1 - r^2) Xp with X1, Xp independent copies.
///
/// Brownian paths are cumulative sums of iid N(0, 1/m) increments.
/// Fractional paths are cumulative sums of exact fGn sampled by circulant
/// embedding (spectrum cached per (H, m)), scaled by m^-H via
/// self-similarity; a dense Cholesky fallback covers m <= 2048 if the
/// embedding spectrum fails. Deterministic given (seed, resolved method).
SampledPathPair sample_pair(const GeneratorConfig& cfg);

}  // namespace yule
