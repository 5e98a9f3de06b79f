#pragma once

#include <Eigen/Core>

namespace yule {

/// Neumaier-compensated accumulator. Keeps the running error term so long
/// sums stay accurate to a few ulps instead of drifting by n*eps.
template <typename Scalar = double>
struct StableSum {
  Scalar sum{0};
  Scalar comp{0};

  void add(Scalar v) {
    const Scalar t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }

  StableSum& operator+=(Scalar v) {
    add(v);
    return *this;
  }

  Scalar value() const { return sum + comp; }
};

template <typename Derived>
typename Derived::Scalar stable_sum(const Eigen::DenseBase<Derived>& v) {
  StableSum<typename Derived::Scalar> acc;
  for (Eigen::Index i = 0; i < v.size(); ++i) acc.add(v(i));
  return acc.value();
}

template <typename Derived>
typename Derived::Scalar stable_mean(const Eigen::DenseBase<Derived>& v) {
  return stable_sum(v) / static_cast<typename Derived::Scalar>(v.size());
}

}  // namespace yule
