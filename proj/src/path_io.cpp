#include "yule/path_io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "yule/errors.h"

namespace yule {

namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto* begin = s.data();
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc{} || res.ptr != end)
    throw IoError("cannot parse number: '" + s + "'");
  return v;
}

// The grid is reconstructed from the row count; every t must then sit on
// k/n within 1e-12 relative spacing tolerance.
void check_grid(const std::vector<double>& t) {
  const auto n = static_cast<std::int64_t>(t.size()) - 1;
  if (n < 2) throw GridError("need at least 3 grid points");
  const double step = 1.0 / static_cast<double>(n);
  const double tol = 1e-12 * step;
  if (std::abs(t.front()) > tol) throw GridError("grid must start at t = 0");
  if (std::abs(t.back() - 1.0) > tol) throw GridError("grid must end at t = 1");
  for (std::size_t k = 0; k + 1 < t.size(); ++k) {
    if (std::abs(t[k + 1] - t[k] - step) > tol)
      throw GridError("grid is not uniform at row " + std::to_string(k + 1));
  }
}

SampledPathPair assemble(std::vector<double> t, std::vector<double> x1,
                         std::vector<double> x2, ModelSpec model) {
  check_grid(t);
  const auto n = static_cast<std::int64_t>(t.size()) - 1;
  SampledPathPair pair;
  pair.first.grid = UniformGrid{n};
  pair.second.grid = UniformGrid{n};
  pair.first.values = Eigen::Map<Eigen::VectorXd>(x1.data(), n + 1);
  pair.second.values = Eigen::Map<Eigen::VectorXd>(x2.data(), n + 1);
  pair.model = model;
  validate(pair);
  return pair;
}

}  // namespace

std::string model_kind_name(ProcessKind kind) {
  return kind == ProcessKind::StandardBm ? "bm" : "fbm";
}

ProcessKind model_kind_from_name(const std::string& name) {
  if (name == "bm") return ProcessKind::StandardBm;
  if (name == "fbm") return ProcessKind::FractionalBm;
  throw IoError("unknown model kind: '" + name + "'");
}

void save_pair_csv(std::ostream& out, const SampledPathPair& pair) {
  out << "t,x1,x2\n";
  const auto& g = pair.grid();
  for (std::int64_t k = 0; k <= g.n; ++k) {
    out << fmt17(g.point(k)) << ',' << fmt17(pair.first.values(k)) << ','
        << fmt17(pair.second.values(k)) << '\n';
  }
}

SampledPathPair load_pair_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty stream");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,x1,x2")
    throw IoError("expected header 't,x1,x2', got '" + line + "'");
  std::vector<double> t, x1, x2;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 3)
      throw IoError("expected 3 columns, got " +
                    std::to_string(fields.size()));
    t.push_back(parse_double(fields[0]));
    x1.push_back(parse_double(fields[1]));
    x2.push_back(parse_double(fields[2]));
    if (!std::isfinite(x1.back()) || !std::isfinite(x2.back()))
      throw ValueError("non-finite sample value");
  }
  return assemble(std::move(t), std::move(x1), std::move(x2), ModelSpec{});
}

void save_pair_json(std::ostream& out, const SampledPathPair& pair) {
  nlohmann::json j;
  j["n"] = pair.grid().n;
  nlohmann::json model;
  model["kind"] = model_kind_name(pair.model.kind);
  if (pair.model.hurst) model["hurst"] = *pair.model.hurst;
  if (pair.model.true_r) model["true_r"] = *pair.model.true_r;
  if (pair.model.seed) model["seed"] = *pair.model.seed;
  j["model"] = model;
  j["x1"] = std::vector<double>(pair.first.values.begin(),
                                pair.first.values.end());
  j["x2"] = std::vector<double>(pair.second.values.begin(),
                                pair.second.values.end());
  out << j.dump() << '\n';
}

SampledPathPair load_pair_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("bad JSON: ") + e.what());
  }
  try {
    const auto n = j.at("n").get<std::int64_t>();
    auto x1 = j.at("x1").get<std::vector<double>>();
    auto x2 = j.at("x2").get<std::vector<double>>();
    if (static_cast<std::int64_t>(x1.size()) != n + 1 ||
        static_cast<std::int64_t>(x2.size()) != n + 1)
      throw GridError("array length does not match n + 1");
    ModelSpec model;
    if (j.contains("model")) {
      const auto& m = j.at("model");
      model.kind = model_kind_from_name(m.at("kind").get<std::string>());
      if (m.contains("hurst")) model.hurst = m.at("hurst").get<double>();
      if (m.contains("true_r")) model.true_r = m.at("true_r").get<double>();
      if (m.contains("seed")) model.seed = m.at("seed").get<std::uint64_t>();
    }
    std::vector<double> t(x1.size());
    for (std::size_t k = 0; k < t.size(); ++k)
      t[k] = static_cast<double>(k) / static_cast<double>(n);
    return assemble(std::move(t), std::move(x1), std::move(x2), model);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("bad pair JSON: ") + e.what());
  }
}

void save_pair(std::ostream& out, const SampledPathPair& pair,
               PairFormat format) {
  if (format == PairFormat::Csv)
    save_pair_csv(out, pair);
  else
    save_pair_json(out, pair);
}

SampledPathPair load_pair(std::istream& in, PairFormat format) {
  return format == PairFormat::Csv ? load_pair_csv(in) : load_pair_json(in);
}

SampledPathPair load_pair_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  const bool json = path.size() >= 5 &&
                    path.compare(path.size() - 5, 5, ".json") == 0;
  return load_pair(in, json ? PairFormat::Json : PairFormat::Csv);
}

void save_pair_file(const std::string& path, const SampledPathPair& pair,
                    PairFormat format) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  save_pair(out, pair, format);
}

}  // namespace yule
