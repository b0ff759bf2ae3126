#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "scartest/matrix.hpp"

namespace scartest {

/// Binary probabilistic classifier: fit on 0/1 targets, then score rows with
/// the probability of class 1. Predictions are deterministic after fit.
class ProbClassifier {
 public:
  virtual ~ProbClassifier() = default;
  virtual void fit(const FeatureMatrix& features,
                   std::span<const std::uint8_t> targets) = 0;
  virtual std::vector<double> predict_proba(const FeatureMatrix& features) const = 0;
};

struct ForestParams {
  int n_trees = 100;
  int max_depth = 0;          // 0 = unbounded
  int min_leaf = 1;
  int features_per_split = 0; // 0 = ceil(sqrt(d))
  std::uint64_t seed = 0;
};

/**
 * Bagged CART forest: bootstrap per tree, Gini split criterion, axis-aligned
 * thresholds at midpoints of consecutive distinct values. predict_proba is
 * the mean of per-tree leaf class-1 fractions. Per-tree seeds derive from
 * params.seed, so results are independent of evaluation order.
 */
class RandomForest final : public ProbClassifier {
 public:
  explicit RandomForest(ForestParams params = {});
  void fit(const FeatureMatrix& features,
           std::span<const std::uint8_t> targets) override;
  std::vector<double> predict_proba(const FeatureMatrix& features) const override;

  const ForestParams& params() const { return params_; }

 private:
  struct Node {
    int feature = -1;        // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double p1 = 0.0;         // leaf class-1 fraction
  };
  struct Tree {
    std::vector<Node> nodes;
  };

  double predict_row(const Tree& tree, std::span<const double> x) const;

  ForestParams params_;
  std::vector<Tree> trees_;
};

/**
 * Gaussian Naive Bayes: per-class, per-feature normal densities with a
 * variance floor of 1e-9 times the pooled feature variance so constant
 * features cannot produce NaNs. Scoring sums log densities.
 */
class GaussianNb final : public ProbClassifier {
 public:
  GaussianNb() = default;
  /// Hand-set model, mainly for closed-form checks.
  GaussianNb(std::vector<double> mean0, std::vector<double> var0,
             std::vector<double> mean1, std::vector<double> var1,
             double prior1);

  void fit(const FeatureMatrix& features,
           std::span<const std::uint8_t> targets) override;
  std::vector<double> predict_proba(const FeatureMatrix& features) const override;

  /// True when every feature was constant across the pooled training data.
  bool degenerate() const { return degenerate_; }

 private:
  std::vector<double> mean0_, var0_, mean1_, var1_;
  double log_prior1_ = 0.0, log_prior0_ = 0.0;
  bool degenerate_ = false;
};

std::unique_ptr<ProbClassifier> fit_random_forest(
    const FeatureMatrix& features, std::span<const std::uint8_t> targets,
    const ForestParams& params);
std::unique_ptr<ProbClassifier> fit_gaussian_nb(
    const FeatureMatrix& features, std::span<const std::uint8_t> targets);

struct LogisticFit {
  std::vector<double> weights;
  double intercept = 0.0;
  bool converged = false;
  int iterations = 0;
  double grad_norm = 0.0;
};

/**
 * L2-penalized logistic regression fit by damped Newton iterations
 * (intercept unpenalized). Convergence: penalized gradient norm < 1e-6.
 */
LogisticFit fit_logistic(const FeatureMatrix& features,
                         std::span<const std::uint8_t> targets,
                         double l2 = 1e-4);

/**
 * ROC AUC via the rank-sum form of the Mann-Whitney statistic; tied scores
 * contribute 1/2. Throws if only one label value is present.
 */
double roc_auc(std::span<const double> scores,
               std::span<const std::uint8_t> labels);

}  // namespace scartest
