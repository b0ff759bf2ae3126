#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "scartest/dataset.hpp"

namespace scartest {

/// Numerically stable logistic function, exact symmetry sigmoid(-s) = 1 - sigmoid(s).
double sigmoid(double s);

/// Inverse logistic; p must lie in (0, 1).
double logit(double p);

enum class StrategyKind { kS0, kS1, kS2, kS3 };

const char* strategy_name(StrategyKind kind);
StrategyKind parse_strategy(const std::string& name);

/**
 * Propensity function e(x) = P(labeled | x, positive) used to turn oracle
 * data into PU data:
 *
 *   S0: e(x) = c                      (constant; the SCAR case)
 *   S1: e(x) = sigmoid(g * x[0])
 *   S2: e(x) = sigmoid(g * dot(x, beta) + a)
 *   S3: e(x) = sigmoid(g * dot(x, beta) + a)^10
 *
 * S2/S3 require beta and a; calibrate_strategy fits beta by logistic
 * regression on the oracle classes and solves a for a target label frequency.
 */
struct PropensityStrategy {
  StrategyKind kind = StrategyKind::kS0;
  double c = 0.5;             // S0 label frequency
  double g = 0.0;             // S1-S3 deviation from constant propensity
  std::vector<double> beta;   // S2-S3
  double a = 0.0;             // S2-S3 intercept

  /// Round-trippable key=value text (one field per line).
  std::string to_text() const;
  static PropensityStrategy from_text(const std::string& text);
};

double evaluate_propensity(const PropensityStrategy& strategy,
                           std::span<const double> x);

/**
 * Solves mean_i sigmoid(g * dot(x_i, beta) + a)^exponent = c_target over the
 * given positive rows for the intercept a. The mean is strictly increasing
 * in a, so bisection on [-40, 40] finds the unique root; tolerance 1e-6 on
 * the mean, 200 iteration cap.
 */
double calibrate_intercept(const FeatureMatrix& positives,
                           std::span<const double> beta, double g,
                           double c_target, int exponent);

/// Builds a ready-to-use strategy for the dataset: S0/S1 pass through,
/// S2/S3 fit beta on (features, y) and calibrate the intercept to c_target.
PropensityStrategy calibrate_strategy(StrategyKind kind, double g,
                                      double c_target,
                                      const OracleDataset& ds,
                                      double l2 = 1e-4);

/**
 * Draws s[i] ~ Bernoulli(e(x_i)) for positive rows, s[i] = 0 for negatives.
 * Returns a copy of the dataset with s filled in. Throws std::runtime_error
 * if no row ends up labeled (callers retry with a fresh seed).
 */
OracleDataset apply_labeling(const OracleDataset& ds,
                             const PropensityStrategy& strategy,
                             std::uint64_t seed);

}  // namespace scartest
