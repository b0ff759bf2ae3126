#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace scartest {

/**
 * Posterior of the positive class among unlabeled rows under a constant
 * labeling frequency c: (1 - c) * y / (1 - c * y). Strictly increasing in y,
 * which is why ranking by the naive classifier's score recovers the ranking
 * by the class posterior.
 */
double tilde_y(double y, double c);

/// Lower bound prod_{i=1..k} (1 - i / (m + 1)) on the probability that the
/// top-k concomitant classes are all positive (requires the ranking score's
/// conditional-positive-rate to stochastically dominate Uniform[0,1]).
double concomitant_bound(std::size_t k, std::size_t m);

/// Closed-form P(y=1 | x) for the art1 generator, computed in log space:
/// the class log-density difference is dot(x, b) - |b|^2/2.
double art1_oracle_posterior(std::span<const double> x, double prior,
                             std::span<const double> shift);

/**
 * Concomitant experiment configuration: n observations with class prior
 * `prior` and labeling frequency c leave m = n(1 - c*prior) unlabeled rows,
 * of which k = n*prior*(1 - c) are expected to be positive.
 */
struct ConcomitantConfig {
  double prior = 0.2;
  double c = 0.8;
  std::size_t n = 100;

  std::size_t m() const;
  std::size_t k() const;
  /// P(y = 1 | unlabeled) = prior(1-c) / (1 - c*prior).
  double unlabeled_positive_rate() const;
  void validate() const;
};

struct ConcomitantResult {
  std::size_t k = 0;
  std::size_t m = 0;
  int reps = 0;
  double all_top_k_freq = 0.0;    // P(top-k concomitants all positive)
  double se = 0.0;                // binomial standard error of the above
  std::vector<double> rank_freq;  // P(concomitant at rank i is positive), i=1..k
  /// joint_freq[i][j], i<j (0-based ranks): P(both concomitants positive).
  std::vector<std::vector<double>> joint_freq;
};

/**
 * Monte Carlo estimate of concomitant precision in the idealized scenario
 * where the ranking score is known exactly: each rep draws m unlabeled rows
 * from the art1 + constant-propensity(c) model, ranks them by tilde_y of the
 * oracle posterior, and inspects the true classes of the top k.
 */
ConcomitantResult simulate_concomitant_precision(const ConcomitantConfig& cfg,
                                                 std::size_t d,
                                                 std::span<const double> shift,
                                                 int reps, std::uint64_t seed);

}  // namespace scartest
