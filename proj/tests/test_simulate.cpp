#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "yule/errors.h"
#include "yule/functionals.h"
#include "yule/rng.h"
#include "yule/simulate.h"

using Catch::Approx;
using namespace yule;

namespace {

GeneratorConfig fbm_config(std::int64_t m, double hurst, double r,
                           std::uint64_t seed,
                           SampleMethod method = SampleMethod::Auto) {
  GeneratorConfig cfg;
  cfg.model.kind = ProcessKind::FractionalBm;
  cfg.model.hurst = hurst;
  cfg.model.true_r = r;
  cfg.n_fine = m;
  cfg.seed = seed;
  cfg.method = method;
  return cfg;
}

double two_sample_ks(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j])
      ++i;
    else
      ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() -
                             static_cast<double>(j) / b.size()));
  }
  return d;
}

}  // namespace

TEST_CASE("fGn autocovariance closed cases") {
  REQUIRE(fgn_autocov(0.75, 0) == Approx(1.0));
  REQUIRE(fgn_autocov(0.9, 0) == Approx(1.0));
  for (std::int64_t k : {1, 2, 5})
    REQUIRE(fgn_autocov(0.5, k) == Approx(0.0).margin(1e-15));
  REQUIRE(fgn_autocov(0.75, 1) == Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));
  REQUIRE(fgn_autocov(0.75, -1) == fgn_autocov(0.75, 1));
}

TEST_CASE("sampling is deterministic and r = 1 collapses the pair") {
  const auto cfg = fbm_config(256, 0.8, 0.3, 2718);
  const SampledPathPair p1 = sample_pair(cfg);
  const SampledPathPair p2 = sample_pair(cfg);
  REQUIRE(p1.first.values == p2.first.values);
  REQUIRE(p1.second.values == p2.second.values);

  auto collapse = fbm_config(128, 0.75, 1.0, 5);
  const SampledPathPair same = sample_pair(collapse);
  REQUIRE(same.first.values == same.second.values);
  collapse.model.true_r = -1.0;
  const SampledPathPair flipped = sample_pair(collapse);
  REQUIRE(flipped.second.values == (-flipped.first.values).eval());

  collapse.model.true_r = 1.5;
  REQUIRE_THROWS_AS(sample_pair(collapse), InvalidR);
}

TEST_CASE("paths start at zero and share the grid") {
  const SampledPathPair pair = sample_pair(fbm_config(64, 0.6, -0.2, 7));
  REQUIRE(pair.first.values(0) == 0.0);
  REQUIRE(pair.second.values(0) == 0.0);
  REQUIRE(pair.first.values.size() == 65);
  validate(pair);
}

TEST_CASE("brownian terminal variance is standard") {
  // X(1) ~ N(0,1) regardless of the grid; moderate grid keeps this quick
  GeneratorConfig cfg;
  cfg.model.kind = ProcessKind::StandardBm;
  cfg.model.true_r = 0.0;
  cfg.n_fine = 100000;
  const std::int64_t reps = 10000;
  double sq = 0.0;
  for (std::int64_t i = 0; i < reps; ++i) {
    cfg.seed = split_stream(11, i);
    const SampledPathPair pair = sample_pair(cfg);
    const double x = pair.first.at_one();
    sq += x * x;
  }
  const double var = sq / reps;
  REQUIRE(var == Approx(1.0).margin(3.0 * std::sqrt(2.0 / reps)));
}

TEST_CASE("empirical increment autocovariance matches fGn") {
  const double hurst = 0.75;
  const std::int64_t m = 1024;
  const std::int64_t reps = 10000;
  const double scale = std::pow(static_cast<double>(m), 2.0 * hurst);
  std::vector<std::vector<double>> per_lag(6);
  for (auto& v : per_lag) v.reserve(reps);
  for (std::int64_t i = 0; i < reps; ++i) {
    const SampledPathPair pair =
        sample_pair(fbm_config(m, hurst, 0.0, split_stream(123, i)));
    const Eigen::VectorXd inc =
        pair.first.values.tail(m) - pair.first.values.head(m);
    for (int lag = 0; lag <= 5; ++lag) {
      double acc = 0.0;
      for (std::int64_t j = 0; j + lag < m; ++j) acc += inc(j) * inc(j + lag);
      per_lag[lag].push_back(scale * acc / static_cast<double>(m - lag));
    }
  }
  for (int lag = 0; lag <= 5; ++lag) {
    double mean = 0.0;
    for (double v : per_lag[lag]) mean += v;
    mean /= reps;
    double var = 0.0;
    for (double v : per_lag[lag]) var += (v - mean) * (v - mean);
    const double se = std::sqrt(var / (reps - 1) / reps);
    REQUIRE(mean == Approx(fgn_autocov(hurst, lag)).margin(3.0 * se));
  }
}

TEST_CASE("fractional covariance at interior times") {
  // E[X(s)X(t)] = (s^2H + t^2H - |t-s|^2H)/2; at (0.5, 1.0), H = 0.75 the
  // value is exactly 1/2
  const double hurst = 0.75;
  const std::int64_t m = 4096;
  const std::int64_t reps = 10000;
  double acc = 0.0, acc2 = 0.0;
  for (std::int64_t i = 0; i < reps; ++i) {
    const SampledPathPair pair =
        sample_pair(fbm_config(m, hurst, 0.0, split_stream(321, i)));
    const double v = pair.first.values(m / 2) * pair.first.at_one();
    acc += v;
    acc2 += v * v;
  }
  const double mean = acc / reps;
  const double se = std::sqrt((acc2 / reps - mean * mean) / reps);
  REQUIRE(mean == Approx(0.5).margin(3.0 * se));
}

TEST_CASE("cholesky fallback draws the same law") {
  const double hurst = 0.7;
  const std::int64_t m = 64;
  const std::int64_t reps = 4000;
  double acc_c = 0.0, acc_l = 0.0;
  for (std::int64_t i = 0; i < reps; ++i) {
    const auto a = sample_pair(
        fbm_config(m, hurst, 0.0, split_stream(9, i), SampleMethod::Auto));
    const auto b = sample_pair(
        fbm_config(m, hurst, 0.0, split_stream(10, i), SampleMethod::Cholesky));
    acc_c += a.first.at_one() * a.first.at_one();
    acc_l += b.first.at_one() * b.first.at_one();
  }
  // terminal variance 1 for both samplers
  REQUIRE(acc_c / reps == Approx(1.0).margin(0.07));
  REQUIRE(acc_l / reps == Approx(1.0).margin(0.07));
  // determinism holds per method
  const auto c1 = sample_pair(fbm_config(32, hurst, 0.2, 77, SampleMethod::Cholesky));
  const auto c2 = sample_pair(fbm_config(32, hurst, 0.2, 77, SampleMethod::Cholesky));
  REQUIRE(c1.first.values == c2.first.values);
}

TEST_CASE("correlation law is stable under grid refinement") {
  const double hurst = 0.75;
  const std::int64_t reps = 10000;
  std::vector<double> rho_a, rho_b;
  rho_a.reserve(reps);
  rho_b.reserve(reps);
  for (std::int64_t i = 0; i < reps; ++i) {
    const auto a = sample_pair(fbm_config(512, hurst, 0.0, split_stream(1, i)));
    const auto b = sample_pair(fbm_config(1024, hurst, 0.0, split_stream(2, i)));
    rho_a.push_back(correlation(fine_triple(a)));
    rho_b.push_back(correlation(fine_triple(b)));
  }
  REQUIRE(two_sample_ks(rho_a, rho_b) < 0.02);
}
