#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "support.h"
#include "yule/errors.h"
#include "yule/functionals.h"
#include "yule/path_io.h"
#include "yule/rng.h"
#include "yule/simulate.h"

using Catch::Approx;
using namespace yule;

namespace {

SampledPathPair random_pair(std::int64_t n, std::uint64_t seed,
                            ProcessKind kind = ProcessKind::StandardBm) {
  SampledPathPair pair;
  pair.first.grid = UniformGrid{n};
  pair.second.grid = UniformGrid{n};
  pair.first.values.resize(n + 1);
  pair.second.values.resize(n + 1);
  CounterRng rng(seed);
  for (std::int64_t k = 0; k <= n; ++k) {
    pair.first.values(k) = rng.next_gaussian();
    pair.second.values(k) = rng.next_gaussian();
  }
  pair.model.kind = kind;
  if (kind == ProcessKind::FractionalBm) pair.model.hurst = 0.75;
  pair.model.true_r = 0.25;
  pair.model.seed = seed;
  return pair;
}

}  // namespace

TEST_CASE("decimate keeps every factor-th value, left aligned") {
  SampledPath path;
  path.grid = UniformGrid{4};
  path.values.resize(5);
  path.values << 0, 1, 2, 3, 4;
  const SampledPath half = decimate(path, 2);
  REQUIRE(half.grid.n == 2);
  REQUIRE(half.values(0) == 0);
  REQUIRE(half.values(1) == 2);
  REQUIRE(half.values(2) == 4);

  const SampledPath same = decimate(path, 1);
  REQUIRE(same.values == path.values);

  REQUIRE_THROWS_AS(decimate(path, 3), NonDivisibleDecimation);
}

TEST_CASE("decimate composes multiplicatively") {
  const auto pair = random_pair(24, 9);
  const auto ab = decimate(decimate(pair.first, 2), 3);
  const auto direct = decimate(pair.first, 6);
  REQUIRE(ab.grid.n == direct.grid.n);
  REQUIRE(ab.values == direct.values);
}

TEST_CASE("functionals of a decimated fractional path match direct sums") {
  GeneratorConfig cfg;
  cfg.model.kind = ProcessKind::FractionalBm;
  cfg.model.hurst = 0.75;
  cfg.model.true_r = 0.4;
  cfg.n_fine = 200;
  cfg.seed = 31;
  const SampledPathPair pair = sample_pair(cfg);
  const SampledPathPair coarse = decimate(pair, 100);
  REQUIRE(coarse.grid().n == 2);
  const FunctionalTriple t = discrete_triple(coarse);
  // n = 2 keeps only k = 0, 1; value at t=0 is 0 for model paths
  const double f0 = 0.0, f1 = coarse.first.values(1);
  const double g0 = 0.0, g1 = coarse.second.values(1);
  const double fbar = 0.5 * (f0 + f1), gbar = 0.5 * (g0 + g1);
  REQUIRE(t.d1 == Approx(0.5 * (f0 * f0 + f1 * f1) - fbar * fbar).epsilon(1e-14));
  REQUIRE(t.d2 == Approx(0.5 * (g0 * g0 + g1 * g1) - gbar * gbar).epsilon(1e-14));
  REQUIRE(t.a == Approx(0.5 * (f0 * g0 + f1 * g1) - fbar * gbar).epsilon(1e-14));
}

TEST_CASE("csv parses the documented example") {
  std::istringstream in("t,x1,x2\n0,0,0\n0.5,1,-1\n1,2,0\n");
  const SampledPathPair pair = load_pair_csv(in);
  REQUIRE(pair.grid().n == 2);
  REQUIRE(pair.first.values(1) == 1.0);
  REQUIRE(pair.second.values(1) == -1.0);
}

TEST_CASE("csv grid validation") {
  SECTION("duplicate t row") {
    std::istringstream in("t,x1,x2\n0,0,0\n0.5,1,1\n0.5,2,2\n1,3,3\n");
    REQUIRE_THROWS_AS(load_pair_csv(in), GridError);
  }
  SECTION("non-uniform spacing") {
    std::istringstream in("t,x1,x2\n0,0,0\n0.4,1,1\n1,2,2\n");
    REQUIRE_THROWS_AS(load_pair_csv(in), GridError);
  }
  SECTION("missing t = 0") {
    std::istringstream in("t,x1,x2\n0.25,0,0\n0.5,1,1\n0.75,2,2\n1,3,3\n");
    REQUIRE_THROWS_AS(load_pair_csv(in), GridError);
  }
  SECTION("missing t = 1") {
    std::istringstream in("t,x1,x2\n0,0,0\n0.25,1,1\n0.5,2,2\n0.75,3,3\n");
    REQUIRE_THROWS_AS(load_pair_csv(in), GridError);
  }
  SECTION("NaN value") {
    std::istringstream in("t,x1,x2\n0,0,0\n0.5,nan,1\n1,2,2\n");
    REQUIRE_THROWS_AS(load_pair_csv(in), Error);
  }
  SECTION("bad header") {
    std::istringstream in("time,a,b\n0,0,0\n");
    REQUIRE_THROWS_AS(load_pair_csv(in), IoError);
  }
}

TEST_CASE("round-trips are bit exact in both formats") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    const auto pair = random_pair(17, seed, ProcessKind::FractionalBm);
    for (const PairFormat fmt : {PairFormat::Csv, PairFormat::Json}) {
      std::stringstream buf;
      save_pair(buf, pair, fmt);
      const SampledPathPair back = load_pair(buf, fmt);
      REQUIRE(back.grid().n == pair.grid().n);
      REQUIRE(back.first.values == pair.first.values);
      REQUIRE(back.second.values == pair.second.values);
      if (fmt == PairFormat::Json) {
        REQUIRE(back.model.kind == pair.model.kind);
        REQUIRE(back.model.hurst == pair.model.hurst);
        REQUIRE(back.model.true_r == pair.model.true_r);
        REQUIRE(back.model.seed == pair.model.seed);
      }
    }
  }
}

TEST_CASE("model validation") {
  ModelSpec bad;
  bad.kind = ProcessKind::FractionalBm;
  bad.hurst = 0.5;
  REQUIRE_THROWS_AS(validate(bad), ValueError);
  bad.hurst = 1.0;
  REQUIRE_THROWS_AS(validate(bad), ValueError);
  bad.hurst = 0.75;
  bad.true_r = 1.5;
  REQUIRE_THROWS_AS(validate(bad), InvalidR);
}
