#include "cli.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "yule/errors.h"
#include "yule/inference.h"
#include "yule/limit_constants.h"
#include "yule/montecarlo.h"
#include "yule/path_io.h"
#include "yule/report_json.h"
#include "yule/simulate.h"

namespace yule {

namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

constexpr const char* kSigmaNote =
    "reported magnitudes are the variance sigma_h_sq and the radicand "
    "sigma_h_d^2's square root sigma_h_d; at H=0.75 sigma_h_sq=0.0254852 "
    "and sigma_h_d=0.1448448";

struct SigmaArgs {
  std::vector<double> hurst;
  double tol = 1e-8;
};

struct GenArgs {
  std::string model = "bm";
  double hurst = 0.75;
  double rho = 0.0;
  std::int64_t n = 100;
  std::uint64_t seed = 0;
  std::string method = "auto";
  std::string out_path;
  std::string format = "csv";
};

struct StatArgs {
  std::string in_path;
  std::int64_t n = 0;
  std::int64_t fine_factor = 100;
  double null_rho = 0.0;
};

struct TestArgs {
  std::string in_path;
  std::int64_t n = 0;
  std::string mode = "continuous";
  double null_rho = 0.0;
  double alpha = 0.05;
  std::int64_t fine_factor = 100;
};

struct McArgs {
  std::string model = "bm";
  double hurst = 0.75;
  double rho = 0.0;
  double null_rho = 0.0;
  std::int64_t n = 64;
  std::int64_t fine_factor = 100;
  std::string mode = "continuous";
  std::int64_t reps = 10000;
  std::uint64_t seed = 0;
  int bins = 61;
  double alpha = 0.05;
  int threads = 0;
  std::string out_path;
  std::string format = "csv";
};

SampleMethod parse_method(const std::string& name) {
  if (name == "auto") return SampleMethod::Auto;
  if (name == "circulant") return SampleMethod::CirculantEmbedding;
  if (name == "cholesky") return SampleMethod::Cholesky;
  throw IoError("unknown method '" + name + "'");
}

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path,
                             std::ostream& fallback) {
  if (path.empty()) return fallback;
  file.open(path);
  if (!file) throw IoError("cannot write '" + path + "'");
  return file;
}

void emit_sigma(std::ostream& out, const SigmaArgs& args, bool json) {
  QuadratureConfig cfg;
  cfg.abs_tol = args.tol;
  nlohmann::json rows = nlohmann::json::array();
  if (!json) {
    out << "# note," << kSigmaNote << '\n';
    out << "H,alpha,sigma_h_sq,sigma_h,sigma_h_d,lower_bound,err_sq,err_d\n";
  }
  for (double h : args.hurst) {
    const LimitConstants c = compute_limit_constants(h, cfg);
    if (json) {
      rows.push_back({{"H", c.hurst},
                      {"alpha", c.alpha},
                      {"sigma_h_sq", c.sigma_h_sq},
                      {"sigma_h", c.sigma_h},
                      {"sigma_h_d", c.sigma_h_d},
                      {"sigma_h_d_sq", c.sigma_h_d_sq},
                      {"lower_bound", c.lower_bound},
                      {"err_sq", c.err_sq},
                      {"err_d", c.err_d}});
    } else {
      out << fmt17(c.hurst) << ',' << fmt17(c.alpha) << ','
          << fmt17(c.sigma_h_sq) << ',' << fmt17(c.sigma_h) << ','
          << fmt17(c.sigma_h_d) << ',' << fmt17(c.lower_bound) << ','
          << fmt17(c.err_sq) << ',' << fmt17(c.err_d) << '\n';
    }
  }
  if (json)
    out << nlohmann::json{{"note", kSigmaNote}, {"rows", rows}}.dump() << '\n';
}

void emit_gen(std::ostream& out, const GenArgs& args, bool force_json) {
  GeneratorConfig cfg;
  cfg.model.kind = model_kind_from_name(args.model);
  if (cfg.model.kind == ProcessKind::FractionalBm) cfg.model.hurst = args.hurst;
  cfg.model.true_r = args.rho;
  cfg.n_fine = args.n;
  cfg.seed = args.seed;
  cfg.method = parse_method(args.method);
  const SampledPathPair pair = sample_pair(cfg);
  const bool json = force_json || args.format == "json";
  save_pair(out, pair, json ? PairFormat::Json : PairFormat::Csv);
}

nlohmann::json stat_fields(const TestReport& rep, std::int64_t fine_factor) {
  nlohmann::json j;
  j["status"] = "ok";
  j["rho"] = rep.rho;
  j["rho_n"] = rep.rho_n;
  j["mu"] = rep.mu;
  j["sigma"] = rep.sigma;
  j["n"] = rep.n;
  j["fine_factor"] = fine_factor;
  j["null_r"] = rep.null_r;
  j["fine_triple"] = {{"a", rep.reference_triple.a},
                      {"d1", rep.reference_triple.d1},
                      {"d2", rep.reference_triple.d2}};
  j["coarse_triple"] = {{"a", rep.coarse_triple.a},
                        {"d1", rep.coarse_triple.d1},
                        {"d2", rep.coarse_triple.d2}};
  j["model"] = model_to_json(rep.model);
  return j;
}

int emit_degenerate(std::ostream& out, const std::string& what) {
  nlohmann::json j;
  j["status"] = "degenerate_path";
  j["message"] = what;
  out << j.dump() << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "empirical path-correlation statistics for Brownian and fractional "
      "Brownian motion"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  bool force_json = false;
  app.add_flag("--json", force_json, "force JSON output everywhere");

  SigmaArgs sigma_args;
  auto* sigma = app.add_subcommand(
      "sigma", "limiting-variance constants for the fractional statistics");
  sigma->add_option("--hurst", sigma_args.hurst, "Hurst parameter(s)")
      ->required()
      ->check(CLI::Range(0.5, 1.0));
  sigma->add_option("--tol", sigma_args.tol, "absolute quadrature tolerance");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "sample a correlated path pair");
  gen->add_option("--model", gen_args.model, "bm or fbm")
      ->check(CLI::IsMember({"bm", "fbm"}));
  gen->add_option("--hurst", gen_args.hurst, "Hurst parameter (fbm)");
  gen->add_option("--rho", gen_args.rho, "true correlation in [-1,1]");
  gen->add_option("--n", gen_args.n, "grid subintervals")->required();
  gen->add_option("--seed", gen_args.seed, "RNG seed")->envname("YULE_SEED");
  gen->add_option("--method", gen_args.method, "auto|circulant|cholesky")
      ->check(CLI::IsMember({"auto", "circulant", "cholesky"}));
  gen->add_option("--out", gen_args.out_path, "output file (default stdout)");
  gen->add_option("--format", gen_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  StatArgs stat_args;
  auto* stat = app.add_subcommand(
      "stat", "functionals, correlations, and centering terms of a pair");
  stat->add_option("--in", stat_args.in_path, "pair file")->required();
  stat->add_option("--n", stat_args.n, "coarse grid size")->required();
  stat->add_option("--fine-factor", stat_args.fine_factor,
                   "fine grid = fine-factor * n");
  stat->add_option("--null-rho", stat_args.null_rho, "r for the sigma term");

  TestArgs test_args;
  auto* test = app.add_subcommand("test", "standardized (in)dependence test");
  test->add_option("--in", test_args.in_path, "pair file")->required();
  test->add_option("--n", test_args.n, "coarse grid size")->required();
  test->add_option("--mode", test_args.mode, "continuous or discrete")
      ->check(CLI::IsMember({"continuous", "discrete"}));
  test->add_option("--null-rho", test_args.null_rho, "correlation under H0");
  test->add_option("--alpha", test_args.alpha, "significance level");
  test->add_option("--fine-factor", test_args.fine_factor,
                   "fine grid = fine-factor * n (continuous mode)");

  McArgs mc_args;
  auto* mc = app.add_subcommand(
      "mc", "Monte Carlo distribution of a statistic under the model");
  mc->add_option("--model", mc_args.model, "bm or fbm")
      ->check(CLI::IsMember({"bm", "fbm"}));
  mc->add_option("--hurst", mc_args.hurst, "Hurst parameter (fbm)");
  mc->add_option("--rho", mc_args.rho, "true correlation");
  mc->add_option("--null-rho", mc_args.null_rho, "correlation under H0");
  mc->add_option("--n", mc_args.n, "coarse grid size");
  mc->add_option("--fine-factor", mc_args.fine_factor, "fine grid factor");
  mc->add_option("--mode", mc_args.mode, "continuous or discrete")
      ->check(CLI::IsMember({"continuous", "discrete"}));
  mc->add_option("--reps", mc_args.reps, "replications");
  mc->add_option("--seed", mc_args.seed, "base seed")->envname("YULE_SEED");
  mc->add_option("--bins", mc_args.bins, "histogram bins");
  mc->add_option("--alpha", mc_args.alpha, "significance level");
  mc->add_option("--threads", mc_args.threads, "worker threads (0 = auto)");
  mc->add_option("--out", mc_args.out_path, "output file (default stdout)");
  mc->add_option("--format", mc_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (sigma->parsed()) {
      emit_sigma(out, sigma_args, force_json);
      return 0;
    }

    if (gen->parsed()) {
      std::ofstream file;
      try {
        std::ostream& sink = open_or_stdout(file, gen_args.out_path, out);
        emit_gen(sink, gen_args, force_json);
      } catch (const IoError& e) {
        err << e.what() << '\n';
        return 2;
      }
      return 0;
    }

    if (stat->parsed() || test->parsed()) {
      SampledPathPair pair;
      try {
        pair = load_pair_file(stat->parsed() ? stat_args.in_path
                                             : test_args.in_path);
      } catch (const Error& e) {
        err << e.what() << '\n';
        return 2;
      }
      TestConfig cfg;
      if (stat->parsed()) {
        cfg.null_r = stat_args.null_rho;
        cfg.mode = TestMode::ContinuousProxy;
        cfg.coarse_n = stat_args.n;
        cfg.fine_factor = stat_args.fine_factor;
      } else {
        cfg.null_r = test_args.null_rho;
        cfg.alpha_level = test_args.alpha;
        cfg.mode = test_args.mode == "continuous" ? TestMode::ContinuousProxy
                                                  : TestMode::DiscreteOnly;
        cfg.coarse_n = test_args.n;
        cfg.fine_factor = test_args.fine_factor;
      }
      try {
        const TestReport rep = run_test(pair, cfg);
        if (stat->parsed())
          out << stat_fields(rep, cfg.fine_factor).dump() << '\n';
        else
          out << report_to_json(rep).dump() << '\n';
      } catch (const DegeneratePath& e) {
        return emit_degenerate(out, e.what());
      }
      return 0;
    }

    if (mc->parsed()) {
      McConfig cfg;
      const bool fbm = mc_args.model == "fbm";
      const bool continuous = mc_args.mode == "continuous";
      cfg.statistic = fbm ? (continuous ? StatisticKind::ContinuousFbm
                                        : StatisticKind::DiscreteFbm)
                          : (continuous ? StatisticKind::ContinuousBm
                                        : StatisticKind::DiscreteBm);
      cfg.hurst = mc_args.hurst;
      cfg.true_r = mc_args.rho;
      cfg.null_r = mc_args.null_rho;
      cfg.alpha_level = mc_args.alpha;
      cfg.coarse_n = mc_args.n;
      cfg.fine_factor = mc_args.fine_factor;
      cfg.replications = mc_args.reps;
      cfg.base_seed = mc_args.seed;
      cfg.hist.bins = mc_args.bins;
      cfg.threads = mc_args.threads;
      const McSummary summary = run_mc(cfg);
      std::ofstream file;
      try {
        std::ostream& sink = open_or_stdout(file, mc_args.out_path, out);
        if (force_json || mc_args.format == "json")
          sink << summary_to_json(summary).dump() << '\n';
        else
          export_summary_csv(sink, summary);
      } catch (const IoError& e) {
        err << e.what() << '\n';
        return 2;
      }
      return 0;
    }
  } catch (const IoError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace yule
