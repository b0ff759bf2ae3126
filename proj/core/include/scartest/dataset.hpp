#pragma once

#include <cstdint>
#include <vector>

#include "scartest/matrix.hpp"

namespace scartest {

/**
 * Positive-unlabeled dataset: features plus the observed label indicator s.
 * s[i] = 1 marks a labeled (hence positive) row, s[i] = 0 an unlabeled row.
 */
struct PUDataset {
  FeatureMatrix features;
  std::vector<std::uint8_t> s;

  std::size_t size() const { return s.size(); }
  std::vector<std::size_t> labeled_indices() const;
  std::vector<std::size_t> unlabeled_indices() const;

  /// Enforces: s matches the row count, s is 0/1, and both the labeled and
  /// the unlabeled set are nonempty. Throws std::invalid_argument.
  void validate() const;
};

/**
 * Fully labeled dataset used by generators and benchmarks: features plus the
 * true class y, optionally carrying a label indicator s produced by a
 * labeling strategy. Negatives are never labeled: s[i] = 1 implies y[i] = 1.
 */
struct OracleDataset {
  FeatureMatrix features;
  std::vector<std::uint8_t> y;
  std::vector<std::uint8_t> s;  // empty until a labeling strategy ran

  std::size_t size() const { return y.size(); }
  bool has_labels() const { return !s.empty(); }

  void validate() const;
};

/// Fraction of rows with y = 1.
double empirical_prior(const OracleDataset& ds);

/// Drops the oracle class, keeping features and the label indicator.
/// Throws if the dataset has no labels yet or the labeled set is degenerate.
PUDataset to_pu(const OracleDataset& ds);

}  // namespace scartest
