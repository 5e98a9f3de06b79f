#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>

namespace yule {

/// Uniform grid over [0, 1] with n subintervals: t_k = k/n, k = 0..n.
/// Only n is stored; points are derived, so k/n comparisons never drift.
struct UniformGrid {
  std::int64_t n = 2;

  double point(std::int64_t k) const {
    return static_cast<double>(k) / static_cast<double>(n);
  }
  std::int64_t size() const { return n + 1; }

  friend bool operator==(const UniformGrid&, const UniformGrid&) = default;
};

enum class ProcessKind { StandardBm, FractionalBm };

struct ModelSpec {
  ProcessKind kind = ProcessKind::StandardBm;
  std::optional<double> hurst;      // required iff FractionalBm, in (1/2, 1)
  std::optional<double> true_r;     // in [-1, 1] when known
  std::optional<std::uint64_t> seed;
};

/// Real-valued path sampled at every grid point, including both endpoints.
/// t = 1 is carried even though the summation functionals stop at k = n-1,
/// because the bias terms need the value at 1.
struct SampledPath {
  UniformGrid grid;
  Eigen::VectorXd values;  // length n + 1

  double at_one() const { return values(grid.n); }
};

struct SampledPathPair {
  SampledPath first;
  SampledPath second;
  ModelSpec model;

  const UniformGrid& grid() const { return first.grid; }
};

/// Throws GridError / ValueError when sizes disagree or values are not finite.
void validate(const SampledPath& path);
void validate(const SampledPathPair& pair);
void validate(const ModelSpec& model);

/// Restriction to the coarser grid n/factor, keeping indices
/// 0, factor, 2*factor, ..., n (left-endpoint alignment).
SampledPath decimate(const SampledPath& path, std::int64_t factor);
SampledPathPair decimate(const SampledPathPair& pair, std::int64_t factor);

}  // namespace yule
