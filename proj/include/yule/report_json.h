#pragma once

#include <json.hpp>

#include "yule/inference.h"

namespace yule {

/// Stable machine-readable form of a test report. ZeroSigma reports carry
/// null for z and p_value.
nlohmann::json report_to_json(const TestReport& rep);

nlohmann::json model_to_json(const ModelSpec& model);

}  // namespace yule
