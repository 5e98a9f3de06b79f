#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "yule/inference.h"
#include "yule/simulate.h"

namespace yule {

enum class StatisticKind {
  ContinuousBm,
  DiscreteBm,
  ContinuousFbm,
  DiscreteFbm
};

std::string statistic_name(StatisticKind kind);

struct HistogramSpec {
  int bins = 61;
  double lo = -4.0;
  double hi = 4.0;
};

struct Histogram {
  std::vector<double> edges;        // bins + 1 ascending
  std::vector<std::int64_t> counts; // bins entries; outliers land in end bins
  std::int64_t outliers_low = 0;
  std::int64_t outliers_high = 0;
};

struct McConfig {
  StatisticKind statistic = StatisticKind::ContinuousBm;
  double hurst = 0.75;  // used by the fractional statistics
  double true_r = 0.0;
  double null_r = 0.0;
  double alpha_level = 0.05;
  std::int64_t coarse_n = 64;
  std::int64_t fine_factor = 100;
  std::int64_t replications = 10000;
  std::uint64_t base_seed = 0;
  HistogramSpec hist;
  int threads = 0;  // 0 = hardware concurrency
  SampleMethod method = SampleMethod::Auto;
};

struct McSummary {
  McConfig config;
  double mean = 0.0;
  double std_dev = 0.0;      // unbiased
  double ks_distance = 0.0;  // vs standard normal
  bool ks_pass = false;      // at significance 0.01 (1.63 / sqrt(M))
  std::int64_t m_effective = 0;
  std::map<std::string, std::int64_t> failures;
  Histogram histogram;
};

/// Runs M seeded replications of one statistic: per replicate, derive a
/// child seed, sample a pair, evaluate. Replicates run on a thread pool but
/// land in index-order slots, so the reduction (and hence the summary) is
/// identical for any worker count.
McSummary run_mc(const McConfig& cfg);

/// One-sample Kolmogorov-Smirnov distance against N(0, 1).
double ks_distance_vs_normal(std::vector<double> values);

/// CSV: `# key,value` metadata lines, then bin_left,bin_right,count rows.
void export_summary_csv(std::ostream& out, const McSummary& s);
nlohmann::json summary_to_json(const McSummary& s);

}  // namespace yule
