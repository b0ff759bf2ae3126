#pragma once

#include <cstdint>

#include "scartest/dataset.hpp"

namespace scartest {

/**
 * Synthetic two-class Gaussian generators.
 *
 * art1: y ~ Bernoulli(prior); x | y=0 ~ N(0, I_d); x | y=1 ~ N(b, I_d)
 *       with b = (1, ..., 1).
 * art2: as art1 except the positive class covariance is Sigma[i][j] =
 *       0.5^|i-j| (AR(1) profile), sampled through its Cholesky factor.
 *
 * Generation is sequential in row order and fully determined by the seed.
 */
struct Art1Config {
  std::size_t n = 1000;
  std::size_t d = 2;
  std::uint64_t seed = 0;
  double prior = 0.5;
  double shift = 1.0;  // positive-class mean is (shift, ..., shift)

  void validate() const;
};

using Art2Config = Art1Config;

OracleDataset gen_art1(const Art1Config& cfg);
OracleDataset gen_art2(const Art2Config& cfg);

}  // namespace scartest
