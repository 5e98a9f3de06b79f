#include "yule/montecarlo.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>

#include "yule/errors.h"
#include "yule/normal.h"
#include "yule/rng.h"
#include "yule/summation.h"

namespace yule {

std::string statistic_name(StatisticKind kind) {
  switch (kind) {
    case StatisticKind::ContinuousBm: return "continuous-bm";
    case StatisticKind::DiscreteBm: return "discrete-bm";
    case StatisticKind::ContinuousFbm: return "continuous-fbm";
    case StatisticKind::DiscreteFbm: return "discrete-fbm";
  }
  return "unknown";
}

namespace {

bool is_fbm(StatisticKind k) {
  return k == StatisticKind::ContinuousFbm || k == StatisticKind::DiscreteFbm;
}

bool is_continuous(StatisticKind k) {
  return k == StatisticKind::ContinuousBm || k == StatisticKind::ContinuousFbm;
}

struct ReplicateResult {
  double z = std::numeric_limits<double>::quiet_NaN();
  // empty = finite z; otherwise a failure tag
  std::string failure;
};

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

double ks_distance_vs_normal(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const auto m = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double cdf = norm_cdf(values[i]);
    d = std::max(d, cdf - static_cast<double>(i) / m);
    d = std::max(d, static_cast<double>(i + 1) / m - cdf);
  }
  return d;
}

McSummary run_mc(const McConfig& cfg) {
  if (cfg.replications < 100)
    throw ValueError("need at least 100 replications");
  if (cfg.hist.bins < 10) throw ValueError("need at least 10 histogram bins");
  if (!(cfg.hist.lo < cfg.hist.hi)) throw ValueError("bad histogram range");

  ModelSpec model;
  model.kind =
      is_fbm(cfg.statistic) ? ProcessKind::FractionalBm : ProcessKind::StandardBm;
  if (is_fbm(cfg.statistic)) model.hurst = cfg.hurst;
  model.true_r = cfg.true_r;
  validate(model);

  const LimitConstants* constants =
      is_fbm(cfg.statistic) ? &limit_constants_cached(cfg.hurst) : nullptr;

  TestConfig tc;
  tc.null_r = cfg.null_r;
  tc.alpha_level = cfg.alpha_level;
  tc.mode = is_continuous(cfg.statistic) ? TestMode::ContinuousProxy
                                         : TestMode::DiscreteOnly;
  tc.coarse_n = cfg.coarse_n;
  tc.fine_factor = cfg.fine_factor;

  const std::int64_t n_fine = is_continuous(cfg.statistic)
                                  ? cfg.fine_factor * cfg.coarse_n
                                  : 2 * cfg.coarse_n;

  const std::int64_t m = cfg.replications;
  std::vector<ReplicateResult> slots(m);

  auto work = [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t i = begin; i < end; ++i) {
      GeneratorConfig gen;
      gen.model = model;
      gen.n_fine = n_fine;
      gen.seed = split_stream(cfg.base_seed, static_cast<std::uint64_t>(i));
      gen.method = cfg.method;
      try {
        const SampledPathPair pair = sample_pair(gen);
        TestReport rep;
        switch (cfg.statistic) {
          case StatisticKind::ContinuousBm:
            rep = z_continuous_bm(pair, tc);
            break;
          case StatisticKind::DiscreteBm:
            rep = z_discrete_bm(pair, tc);
            break;
          case StatisticKind::ContinuousFbm:
            rep = z_continuous_fbm(pair, tc, *constants);
            break;
          case StatisticKind::DiscreteFbm:
            rep = z_discrete_fbm(pair, tc, *constants);
            break;
        }
        if (rep.outcome == TestOutcome::ZeroSigma)
          slots[i].failure = "zero_sigma";
        else
          slots[i].z = rep.z;
      } catch (const DegeneratePath&) {
        slots[i].failure = "degenerate_path";
      } catch (const NegativeDiscriminant&) {
        slots[i].failure = "negative_discriminant";
      } catch (const EmbeddingFailure&) {
        slots[i].failure = "embedding_failure";
      }
    }
  };

  int threads = cfg.threads > 0
                    ? cfg.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, 64));
  if (threads == 1 || m < 2 * threads) {
    work(0, m);
  } else {
    std::vector<std::thread> pool;
    const std::int64_t chunk = (m + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::int64_t begin = t * chunk;
      const std::int64_t end = std::min<std::int64_t>(m, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  // sequential index-order reduction keeps the summary scheduling-free
  McSummary s;
  s.config = cfg;
  std::vector<double> zs;
  zs.reserve(m);
  for (std::int64_t i = 0; i < m; ++i) {
    if (slots[i].failure.empty())
      zs.push_back(slots[i].z);
    else
      ++s.failures[slots[i].failure];
  }
  s.m_effective = static_cast<std::int64_t>(zs.size());

  if (s.m_effective > 0) {
    StableSum<double> sum;
    for (double z : zs) sum.add(z);
    s.mean = sum.value() / static_cast<double>(s.m_effective);
    if (s.m_effective > 1) {
      StableSum<double> ss;
      for (double z : zs) ss.add((z - s.mean) * (z - s.mean));
      s.std_dev = std::sqrt(ss.value() / static_cast<double>(s.m_effective - 1));
    }
    s.ks_distance = ks_distance_vs_normal(zs);
    s.ks_pass =
        s.ks_distance <= 1.63 / std::sqrt(static_cast<double>(s.m_effective));
  }

  const int bins = cfg.hist.bins;
  s.histogram.edges.resize(bins + 1);
  s.histogram.counts.assign(bins, 0);
  const double width = (cfg.hist.hi - cfg.hist.lo) / bins;
  for (int b = 0; b <= bins; ++b)
    s.histogram.edges[b] = cfg.hist.lo + width * b;
  for (double z : zs) {
    int b = static_cast<int>(std::floor((z - cfg.hist.lo) / width));
    if (z < cfg.hist.lo) {
      b = 0;
      ++s.histogram.outliers_low;
    } else if (b >= bins) {
      b = bins - 1;
      if (z > cfg.hist.hi) ++s.histogram.outliers_high;
    }
    ++s.histogram.counts[b];
  }
  return s;
}

void export_summary_csv(std::ostream& out, const McSummary& s) {
  const McConfig& c = s.config;
  out << "# statistic," << statistic_name(c.statistic) << '\n';
  if (is_fbm(c.statistic)) out << "# hurst," << fmt17(c.hurst) << '\n';
  out << "# true_r," << fmt17(c.true_r) << '\n';
  out << "# null_r," << fmt17(c.null_r) << '\n';
  out << "# n," << c.coarse_n << '\n';
  out << "# fine_factor," << c.fine_factor << '\n';
  out << "# replications," << c.replications << '\n';
  out << "# seed," << c.base_seed << '\n';
  out << "# mean," << fmt17(s.mean) << '\n';
  out << "# std," << fmt17(s.std_dev) << '\n';
  out << "# ks_distance," << fmt17(s.ks_distance) << '\n';
  out << "# ks_pass," << (s.ks_pass ? 1 : 0) << '\n';
  out << "# m_effective," << s.m_effective << '\n';
  for (const auto& [kind, count] : s.failures)
    out << "# failure," << kind << ',' << count << '\n';
  out << "# outliers_low," << s.histogram.outliers_low << '\n';
  out << "# outliers_high," << s.histogram.outliers_high << '\n';
  out << "bin_left,bin_right,count\n";
  for (std::size_t b = 0; b < s.histogram.counts.size(); ++b) {
    out << fmt17(s.histogram.edges[b]) << ','
        << fmt17(s.histogram.edges[b + 1]) << ',' << s.histogram.counts[b]
        << '\n';
  }
}

nlohmann::json summary_to_json(const McSummary& s) {
  const McConfig& c = s.config;
  nlohmann::json j;
  j["statistic"] = statistic_name(c.statistic);
  if (is_fbm(c.statistic)) j["hurst"] = c.hurst;
  j["true_r"] = c.true_r;
  j["null_r"] = c.null_r;
  j["n"] = c.coarse_n;
  j["fine_factor"] = c.fine_factor;
  j["replications"] = c.replications;
  j["seed"] = c.base_seed;
  j["mean"] = s.mean;
  j["std"] = s.std_dev;
  j["ks_distance"] = s.ks_distance;
  j["ks_pass"] = s.ks_pass;
  j["m_effective"] = s.m_effective;
  j["failures"] = s.failures;
  j["histogram"] = {{"edges", s.histogram.edges},
                    {"counts", s.histogram.counts},
                    {"outliers_low", s.histogram.outliers_low},
                    {"outliers_high", s.histogram.outliers_high}};
  return j;
}

}  // namespace yule
