#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "scartest/dataset.hpp"
#include "scartest/divergence.hpp"
#include "scartest/learners.hpp"

namespace scartest {

/**
 * Approximated positive set: all labeled rows plus the k unlabeled rows the
 * naive classifier scores highest, where k matches the expected number of
 * still-unlabeled positives given the class prior.
 */
struct PositiveSetApprox {
  std::vector<std::size_t> indices;     // sorted ascending
  std::vector<std::uint8_t> y_tilde;    // 1 iff row is in the set
  double c_hat = 1.0;                   // (|L|/n) / prior
  std::size_t k = 0;                    // unlabeled rows added
  std::size_t n_labeled = 0;
};

enum class PValueRule {
  kDirect,  // #{T_b >= T_0} / B
  kAddOne,  // (#{T_b >= T_0} + 1) / (B + 1)
};

struct TestOptions {
  int B = 300;
  double alpha = 0.05;
  ForestParams forest;
  PValueRule p_rule = PValueRule::kDirect;
  KlQuadratic kl_quad = KlQuadratic::kSample1;
  int max_redraws = 100;  // per bootstrap iteration, see simulate_null
};

struct TestResult {
  StatisticKind kind = StatisticKind::kKs;
  double t0 = 0.0;
  std::vector<double> null_samples;
  double p_value = 1.0;
  bool reject = false;
  double alpha = 0.05;
  PositiveSetApprox approx;
  std::uint64_t seed = 0;

  /// Flat record (plus the null samples when requested) as JSON text.
  std::string to_json(bool include_null_samples = false) const;
  /// "key: value" lines for terminal output.
  std::string to_report() const;
};

using ClassifierFactory =
    std::function<std::unique_ptr<ProbClassifier>(std::uint64_t seed)>;

/// Forest-backed factory used when none is supplied.
ClassifierFactory default_classifier_factory(ForestParams params = {});

/**
 * Trains the naive classifier on (X, S), ranks unlabeled rows by the
 * predicted labeling probability (ties broken by ascending row index) and
 * keeps the top k = round(n * prior * (1 - c_hat)), clamped to the unlabeled
 * count. Throws std::invalid_argument when the labeled fraction exceeds
 * prior ("prior too small": c_hat would pass 1).
 */
PositiveSetApprox approximate_positive_set(const PUDataset& data, double prior,
                                           const ClassifierFactory& factory,
                                           std::uint64_t seed);

/// Idealized variant with the positive set taken from the oracle classes;
/// c_hat keeps the algorithmic definition (|L|/n)/prior.
PositiveSetApprox positive_set_from_oracle(const OracleDataset& data,
                                           double prior);

/**
 * Null distribution of the statistic: B times, draw an artificial label
 * indicator over the approximated positive set with per-row probability
 * c_hat, and evaluate T(artificially labeled rows, approximated positive
 * rows). Draws yielding fewer than two labeled rows are redrawn (the
 * moment-based statistics need two); more than max_redraws consecutive
 * redraws raise std::runtime_error.
 */
std::vector<double> simulate_null(const PositiveSetApprox& approx,
                                  const FeatureMatrix& features,
                                  StatisticKind kind, int B,
                                  std::uint64_t seed,
                                  const TestOptions& opts = {});

/// Fraction of null samples at or above t0 (exact counting; ties count).
double p_value(double t0, std::span<const double> null_samples,
               PValueRule rule = PValueRule::kDirect);

/**
 * Full testing procedure on PU data: approximate the positive set, compute
 * the observed statistic T0 = T(labeled rows, approximated positive rows),
 * simulate the null, and reject when the p-value falls below alpha.
 */
TestResult run_test(const PUDataset& data, double prior, StatisticKind kind,
                    const TestOptions& opts, std::uint64_t seed);

/// run_test with the positive set replaced by the oracle one (no classifier).
TestResult run_test_oracle(const OracleDataset& data, double prior,
                           StatisticKind kind, const TestOptions& opts,
                           std::uint64_t seed);

}  // namespace scartest
