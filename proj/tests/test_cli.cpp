#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../tools/cli.h"
#include "yule/inference.h"
#include "yule/path_io.h"
#include "yule/report_json.h"

using namespace yule;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/yule_cli_test_") + name;
}

}  // namespace

TEST_CASE("sigma emits the tabulated constants") {
  const CliResult r = cli({"sigma", "--hurst", "0.75"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("H,alpha,sigma_h_sq,sigma_h,sigma_h_d,lower_bound") !=
          std::string::npos);
  REQUIRE(r.out.find("0.0254851") != std::string::npos);   // sigma_h_sq
  REQUIRE(r.out.find("0.14484478") != std::string::npos);  // sigma_h_d

  const CliResult j = cli({"--json", "sigma", "--hurst", "0.75"});
  REQUIRE(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  REQUIRE(parsed.at("rows").size() == 1);
  REQUIRE(parsed.at("rows")[0].at("sigma_h_sq").get<double>() ==
          Catch::Approx(0.025485).margin(1e-4));
}

TEST_CASE("gen then stat on perfectly correlated paths") {
  const std::string file = temp_path("unit.csv");
  const CliResult g = cli({"gen", "--model", "bm", "--rho", "1", "--n", "100",
                           "--seed", "7", "--out", file});
  REQUIRE(g.code == 0);
  const CliResult s =
      cli({"stat", "--in", file, "--n", "10", "--fine-factor", "10"});
  REQUIRE(s.code == 0);
  const auto j = nlohmann::json::parse(s.out);
  REQUIRE(j.at("rho_n").get<double>() == 1.0);
  REQUIRE(j.at("rho").get<double>() == 1.0);
  std::remove(file.c_str());
}

TEST_CASE("cli test output matches the library byte for byte") {
  const std::string file = temp_path("pair.json");
  REQUIRE(cli({"gen", "--model", "fbm", "--hurst", "0.75", "--rho", "0.2",
               "--n", "128", "--seed", "99", "--format", "json", "--out",
               file}).code == 0);
  const CliResult t = cli({"test", "--in", file, "--n", "64", "--mode",
                           "discrete", "--null-rho", "0.2"});
  REQUIRE(t.code == 0);

  const SampledPathPair pair = load_pair_file(file);
  TestConfig cfg;
  cfg.null_r = 0.2;
  cfg.mode = TestMode::DiscreteOnly;
  cfg.coarse_n = 64;
  const std::string expected = report_to_json(run_test(pair, cfg)).dump() + "\n";
  REQUIRE(t.out == expected);
  std::remove(file.c_str());
}

TEST_CASE("no rejection storm under a true null") {
  const std::string file = temp_path("null.json");
  int rejects = 0;
  for (int seed = 1; seed <= 20; ++seed) {
    REQUIRE(cli({"gen", "--model", "bm", "--rho", "0", "--n", "1600", "--seed",
                 std::to_string(seed), "--format", "json", "--out", file})
                .code == 0);
    const CliResult t = cli({"test", "--in", file, "--n", "16", "--null-rho",
                             "0", "--fine-factor", "100"});
    REQUIRE(t.code == 0);
    const auto j = nlohmann::json::parse(t.out);
    const double z = j.at("z").get<double>();
    REQUIRE(std::abs(z) < 4.0);
    if (j.at("reject").get<bool>()) ++rejects;
  }
  REQUIRE(rejects <= 4);
  std::remove(file.c_str());
}

TEST_CASE("degenerate input produces a report with exit 0") {
  const std::string file = temp_path("flat.csv");
  {
    std::ofstream out(file);
    out << "t,x1,x2\n";
    const int n = 40;
    for (int k = 0; k <= n; ++k)
      out << (double(k) / n) << ",1,1\n";
  }
  const CliResult t =
      cli({"test", "--in", file, "--n", "20", "--fine-factor", "2"});
  REQUIRE(t.code == 0);
  const auto j = nlohmann::json::parse(t.out);
  REQUIRE(j.at("status").get<std::string>() == "degenerate_path");
  std::remove(file.c_str());
}

TEST_CASE("mc subcommand emits both formats") {
  const CliResult c = cli({"mc", "--model", "bm", "--mode", "discrete",
                           "--rho", "0.3", "--null-rho", "0.3", "--n", "16",
                           "--reps", "200", "--seed", "4"});
  REQUIRE(c.code == 0);
  REQUIRE(c.out.find("# statistic,discrete-bm") != std::string::npos);
  REQUIRE(c.out.find("bin_left,bin_right,count") != std::string::npos);

  const CliResult j = cli({"mc", "--model", "bm", "--mode", "discrete",
                           "--rho", "0.3", "--null-rho", "0.3", "--n", "16",
                           "--reps", "200", "--seed", "4", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  REQUIRE(parsed.at("m_effective").get<int>() == 200);
}

TEST_CASE("usage and io errors exit 2") {
  REQUIRE(cli({"frobnicate"}).code == 2);
  REQUIRE(cli({"gen", "--model", "bm", "--n", "10", "--bogus-flag"}).code == 2);
  REQUIRE(cli({"test", "--in", "/nonexistent/file.csv", "--n", "4"}).code == 2);
  REQUIRE(cli({"--help"}).code == 0);
  REQUIRE(cli({}).code == 2);
}
