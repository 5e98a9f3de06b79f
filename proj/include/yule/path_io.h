#pragma once

#include <iosfwd>
#include <string>

#include "yule/grid.h"

namespace yule {

enum class PairFormat { Csv, Json };

/// CSV layout: header `t,x1,x2`, one row per grid point in ascending t,
/// 17 significant digits so values round-trip exactly.
void save_pair_csv(std::ostream& out, const SampledPathPair& pair);
SampledPathPair load_pair_csv(std::istream& in);

/// JSON layout: {"n": ..., "model": {...}, "x1": [...], "x2": [...]}.
void save_pair_json(std::ostream& out, const SampledPathPair& pair);
SampledPathPair load_pair_json(std::istream& in);

void save_pair(std::ostream& out, const SampledPathPair& pair,
               PairFormat format);
SampledPathPair load_pair(std::istream& in, PairFormat format);

SampledPathPair load_pair_file(const std::string& path);
void save_pair_file(const std::string& path, const SampledPathPair& pair,
                    PairFormat format);

std::string model_kind_name(ProcessKind kind);
ProcessKind model_kind_from_name(const std::string& name);

}  // namespace yule
