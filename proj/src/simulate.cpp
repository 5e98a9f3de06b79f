#include "yule/simulate.h"

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "yule/errors.h"
#include "yule/rng.h"

namespace yule {

double fgn_autocov(double hurst, std::int64_t lag) {
  const auto k = static_cast<double>(lag < 0 ? -lag : lag);
  const double h2 = 2.0 * hurst;
  return 0.5 * (std::pow(k + 1.0, h2) - 2.0 * std::pow(k, h2) +
                std::pow(std::abs(k - 1.0), h2));
}

namespace {

constexpr std::int64_t kCholeskyLimit = 2048;

std::int64_t embedding_size(std::int64_t m) {
  std::int64_t size = 4;
  while (size < 2 * (m - 1)) size *= 2;
  return size;
}

// sqrt of circulant eigenvalues for the fGn covariance, or empty when the
// spectrum is negative beyond tolerance.
std::vector<double> spectrum_sqrt(double hurst, std::int64_t size) {
  const std::int64_t half = size / 2;
  std::vector<std::complex<double>> row(size);
  for (std::int64_t k = 0; k <= half; ++k) row[k] = fgn_autocov(hurst, k);
  for (std::int64_t k = 1; k < half; ++k) row[size - k] = row[k];
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> lambda(size);
  fft.fwd(lambda, row);
  double max_eig = 0.0;
  for (const auto& l : lambda) max_eig = std::max(max_eig, l.real());
  const double tol = 1e-10 * std::max(1.0, max_eig);
  std::vector<double> out(size);
  for (std::int64_t k = 0; k < size; ++k) {
    const double eig = lambda[k].real();
    if (eig < -tol) return {};
    out[k] = std::sqrt(std::max(eig, 0.0));
  }
  return out;
}

struct SpectrumKey {
  double hurst;
  std::int64_t size;
  bool operator<(const SpectrumKey& o) const {
    return hurst != o.hurst ? hurst < o.hurst : size < o.size;
  }
};

const std::vector<double>& cached_spectrum(double hurst, std::int64_t size) {
  static std::mutex mutex;
  static std::map<SpectrumKey, std::vector<double>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({hurst, size});
  if (it == cache.end())
    it = cache.emplace(SpectrumKey{hurst, size}, spectrum_sqrt(hurst, size))
             .first;
  return it->second;
}

using CholFactor = Eigen::MatrixXd;

std::shared_ptr<const CholFactor> cached_cholesky(double hurst,
                                                  std::int64_t m) {
  static std::mutex mutex;
  static double key_h = -1.0;
  static std::int64_t key_m = -1;
  static std::shared_ptr<const CholFactor> factor;
  std::lock_guard<std::mutex> lock(mutex);
  if (key_h == hurst && key_m == m) return factor;
  Eigen::MatrixXd cov(m, m);
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = 0; j <= i; ++j)
      cov(i, j) = cov(j, i) = fgn_autocov(hurst, i - j);
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success)
    throw EmbeddingFailure("fGn covariance is not positive definite");
  factor = std::make_shared<CholFactor>(llt.matrixL());
  key_h = hurst;
  key_m = m;
  return factor;
}

Eigen::VectorXd cumulative_path(const Eigen::VectorXd& increments) {
  Eigen::VectorXd path(increments.size() + 1);
  path(0) = 0.0;
  for (Eigen::Index k = 0; k < increments.size(); ++k)
    path(k + 1) = path(k) + increments(k);
  return path;
}

// One complex FFT yields two independent fGn vectors (real and imaginary
// parts), one per path of the pair.
void fgn_pair_circulant(const std::vector<double>& sqrt_lambda,
                        std::int64_t m, double scale, CounterRng& rng,
                        Eigen::VectorXd& inc1, Eigen::VectorXd& inc2) {
  const auto size = static_cast<std::int64_t>(sqrt_lambda.size());
  std::vector<std::complex<double>> freq(size);
  for (std::int64_t k = 0; k < size; ++k) {
    const double u = rng.next_gaussian();
    const double v = rng.next_gaussian();
    freq[k] = sqrt_lambda[k] * std::complex<double>(u, v);
  }
  thread_local Eigen::FFT<double> fft;
  std::vector<std::complex<double>> time(size);
  fft.fwd(time, freq);
  const double norm = scale / std::sqrt(static_cast<double>(size));
  inc1.resize(m);
  inc2.resize(m);
  for (std::int64_t k = 0; k < m; ++k) {
    inc1(k) = time[k].real() * norm;
    inc2(k) = time[k].imag() * norm;
  }
}

void fgn_pair_cholesky(double hurst, std::int64_t m, double scale,
                       CounterRng& rng, Eigen::VectorXd& inc1,
                       Eigen::VectorXd& inc2) {
  const auto factor = cached_cholesky(hurst, m);
  Eigen::VectorXd z1(m), z2(m);
  for (std::int64_t k = 0; k < m; ++k) z1(k) = rng.next_gaussian();
  for (std::int64_t k = 0; k < m; ++k) z2(k) = rng.next_gaussian();
  inc1 = scale * (*factor * z1);
  inc2 = scale * (*factor * z2);
}

}  // namespace

SampledPathPair sample_pair(const GeneratorConfig& cfg) {
  validate(cfg.model);
  if (cfg.n_fine < 2) throw GridError("n_fine must be at least 2");
  const double r = cfg.model.true_r.value_or(0.0);
  if (!(std::abs(r) <= 1.0)) throw InvalidR("correlation must lie in [-1, 1]");

  const std::int64_t m = cfg.n_fine;
  CounterRng rng(cfg.seed);
  Eigen::VectorXd inc1, inc2;

  if (cfg.model.kind == ProcessKind::StandardBm) {
    const double step = 1.0 / std::sqrt(static_cast<double>(m));
    inc1.resize(m);
    inc2.resize(m);
    for (std::int64_t k = 0; k < m; ++k) inc1(k) = step * rng.next_gaussian();
    for (std::int64_t k = 0; k < m; ++k) inc2(k) = step * rng.next_gaussian();
  } else {
    const double hurst = *cfg.model.hurst;
    // unit-grid fGn scaled by m^-H (self-similarity)
    const double scale = std::pow(static_cast<double>(m), -hurst);
    SampleMethod method = cfg.method;
    if (method != SampleMethod::Cholesky) {
      const auto& sqrt_lambda = cached_spectrum(hurst, embedding_size(m));
      if (!sqrt_lambda.empty()) {
        fgn_pair_circulant(sqrt_lambda, m, scale, rng, inc1, inc2);
        method = SampleMethod::CirculantEmbedding;
      } else if (cfg.method == SampleMethod::CirculantEmbedding ||
                 m > kCholeskyLimit) {
        throw EmbeddingFailure(
            "circulant spectrum negative beyond tolerance and grid too "
            "large for the dense fallback");
      } else {
        method = SampleMethod::Cholesky;
      }
    }
    if (method == SampleMethod::Cholesky)
      fgn_pair_cholesky(hurst, m, scale, rng, inc1, inc2);
  }

  SampledPathPair pair;
  pair.first.grid = UniformGrid{m};
  pair.second.grid = UniformGrid{m};
  pair.first.values = cumulative_path(inc1);
  const Eigen::VectorXd orthogonal = cumulative_path(inc2);
  pair.second.values =
      r * pair.first.values + std::sqrt(1.0 - r * r) * orthogonal;
  pair.model = cfg.model;
  pair.model.seed = cfg.seed;
  return pair;
}

}  // namespace yule
