#include "scartest/synthetic.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "scartest/rng.hpp"

namespace scartest {

void Art1Config::validate() const {
  if (n == 0 || d == 0) throw std::invalid_argument("generator: n and d must be positive");
  if (!(prior > 0.0 && prior < 1.0)) {
    throw std::invalid_argument("generator: prior must lie in (0, 1)");
  }
  if (!std::isfinite(shift)) throw std::invalid_argument("generator: non-finite shift");
}

namespace {

/// Shared sampler: the negative class is N(0, I); the positive class is
/// N(shift * 1, L L^T) for a lower-triangular factor L. Row order, and the
/// per-row draw order (class first, then d normals), is fixed so that equal
/// configs give bit-identical data regardless of the factor's origin.
OracleDataset sample_gaussian_classes(const Art1Config& cfg,
                                      const Eigen::MatrixXd& pos_factor) {
  cfg.validate();
  OracleDataset ds;
  ds.features = FeatureMatrix(cfg.n, cfg.d);
  ds.y.resize(cfg.n);

  Rng rng(derive_seed(cfg.seed, 0x617274 /* "art" */));
  std::vector<double> z(cfg.d);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    const bool pos = rng.bernoulli(cfg.prior);
    ds.y[i] = pos ? 1 : 0;
    for (std::size_t j = 0; j < cfg.d; ++j) z[j] = rng.normal();
    auto row = ds.features.row(i);
    if (pos) {
      for (std::size_t j = 0; j < cfg.d; ++j) {
        double v = 0.0;
        for (std::size_t l = 0; l <= j; ++l) v += pos_factor(j, l) * z[l];
        row[j] = cfg.shift + v;
      }
    } else {
      for (std::size_t j = 0; j < cfg.d; ++j) row[j] = z[j];
    }
  }
  return ds;
}

}  // namespace

OracleDataset gen_art1(const Art1Config& cfg) {
  cfg.validate();
  return sample_gaussian_classes(
      cfg, Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(cfg.d),
                                     static_cast<Eigen::Index>(cfg.d)));
}

OracleDataset gen_art2(const Art2Config& cfg) {
  cfg.validate();
  const auto d = static_cast<Eigen::Index>(cfg.d);
  Eigen::MatrixXd sigma(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      sigma(i, j) = std::pow(0.5, std::abs(static_cast<double>(i - j)));
    }
  }
  // AR(1)-profile covariance is positive-definite for every d.
  const Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("art2: covariance factorization failed");
  }
  return sample_gaussian_classes(cfg, llt.matrixL());
}

}  // namespace scartest
