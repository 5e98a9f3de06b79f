#include "yule/grid.h"

#include <cmath>
#include <string>

#include "yule/errors.h"

namespace yule {

void validate(const ModelSpec& model) {
  if (model.kind == ProcessKind::FractionalBm) {
    if (!model.hurst)
      throw ValueError("fractional model requires a Hurst parameter");
    if (!(*model.hurst > 0.5 && *model.hurst < 1.0))
      throw ValueError("Hurst parameter must lie in (1/2, 1), got " +
                       std::to_string(*model.hurst));
  }
  if (model.true_r && !(std::abs(*model.true_r) <= 1.0))
    throw InvalidR("correlation must lie in [-1, 1]");
}

void validate(const SampledPath& path) {
  if (path.grid.n < 2) throw GridError("grid needs at least 2 subintervals");
  if (path.values.size() != path.grid.size())
    throw GridError("value count " + std::to_string(path.values.size()) +
                    " does not match grid size " +
                    std::to_string(path.grid.size()));
  if (!path.values.allFinite())
    throw ValueError("path contains a non-finite value");
}

void validate(const SampledPathPair& pair) {
  validate(pair.first);
  validate(pair.second);
  if (pair.first.grid != pair.second.grid)
    throw GridError("paths in a pair must share one grid");
  validate(pair.model);
}

SampledPath decimate(const SampledPath& path, std::int64_t factor) {
  if (factor <= 0) throw NonDivisibleDecimation("factor must be positive");
  if (path.grid.n % factor != 0)
    throw NonDivisibleDecimation("factor " + std::to_string(factor) +
                                 " does not divide n = " +
                                 std::to_string(path.grid.n));
  const std::int64_t m = path.grid.n / factor;
  SampledPath out;
  out.grid = UniformGrid{m};
  out.values.resize(m + 1);
  for (std::int64_t k = 0; k <= m; ++k) out.values(k) = path.values(k * factor);
  return out;
}

SampledPathPair decimate(const SampledPathPair& pair, std::int64_t factor) {
  return {decimate(pair.first, factor), decimate(pair.second, factor),
          pair.model};
}

}  // namespace yule
