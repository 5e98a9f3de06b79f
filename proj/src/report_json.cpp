#include "yule/report_json.h"

#include "yule/path_io.h"

namespace yule {

nlohmann::json model_to_json(const ModelSpec& model) {
  nlohmann::json j;
  j["kind"] = model_kind_name(model.kind);
  if (model.hurst) j["hurst"] = *model.hurst;
  if (model.true_r) j["true_r"] = *model.true_r;
  if (model.seed) j["seed"] = *model.seed;
  return j;
}

namespace {

nlohmann::json triple_to_json(const FunctionalTriple& t) {
  return {{"a", t.a}, {"d1", t.d1}, {"d2", t.d2}};
}

}  // namespace

nlohmann::json report_to_json(const TestReport& rep) {
  nlohmann::json j;
  j["status"] =
      rep.outcome == TestOutcome::ZeroSigma ? "zero_sigma" : "ok";
  if (rep.outcome == TestOutcome::ZeroSigma) {
    j["z"] = nullptr;
    j["p_value"] = nullptr;
  } else {
    j["z"] = rep.z;
    j["p_value"] = rep.p_value;
  }
  j["reject"] = rep.reject;
  j["rho"] = rep.rho;
  j["rho_n"] = rep.rho_n;
  j["mu"] = rep.mu;
  j["sigma"] = rep.sigma;
  j["n"] = rep.n;
  j["mode"] =
      rep.mode == TestMode::ContinuousProxy ? "continuous" : "discrete";
  j["null_r"] = rep.null_r;
  j["alpha_level"] = rep.alpha_level;
  j["model"] = model_to_json(rep.model);
  j["reference_triple"] = triple_to_json(rep.reference_triple);
  j["coarse_triple"] = triple_to_json(rep.coarse_triple);
  return j;
}

}  // namespace yule
