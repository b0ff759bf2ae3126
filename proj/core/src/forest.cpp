#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "scartest/learners.hpp"
#include "scartest/rng.hpp"

namespace scartest {

namespace {

struct SplitCandidate {
  int feature = -1;
  double threshold = 0.0;
  double impurity_decrease = 0.0;
};

// Weighted Gini impurity of a binary split, larger decrease is better.
double gini_decrease(std::size_t n, std::size_t pos, std::size_t n_left,
                     std::size_t pos_left) {
  const auto gini = [](std::size_t cnt, std::size_t p) {
    if (cnt == 0) return 0.0;
    const double f = static_cast<double>(p) / static_cast<double>(cnt);
    return 2.0 * f * (1.0 - f);
  };
  const std::size_t n_right = n - n_left;
  const std::size_t pos_right = pos - pos_left;
  const double parent = gini(n, pos);
  const double child =
      (static_cast<double>(n_left) * gini(n_left, pos_left) +
       static_cast<double>(n_right) * gini(n_right, pos_right)) /
      static_cast<double>(n);
  return parent - child;
}

}  // namespace

RandomForest::RandomForest(ForestParams params) : params_(params) {
  if (params_.n_trees < 1) throw std::invalid_argument("forest: n_trees >= 1");
  if (params_.min_leaf < 1) throw std::invalid_argument("forest: min_leaf >= 1");
}

void RandomForest::fit(const FeatureMatrix& features,
                       std::span<const std::uint8_t> targets) {
  if (targets.size() != features.rows()) {
    throw std::invalid_argument("fit: target length mismatch");
  }
  bool has0 = false, has1 = false;
  for (auto t : targets) (t ? has1 : has0) = true;
  if (!has0 || !has1) {
    throw std::invalid_argument("fit: both classes must be present");
  }

  const std::size_t n = features.rows();
  const int d = static_cast<int>(features.cols());
  const int mtry = params_.features_per_split > 0
                       ? std::min(params_.features_per_split, d)
                       : static_cast<int>(
                             std::ceil(std::sqrt(static_cast<double>(d))));

  trees_.assign(static_cast<std::size_t>(params_.n_trees), {});
  std::vector<int> feature_pool(static_cast<std::size_t>(d));
  std::vector<std::pair<double, std::uint8_t>> sorted;  // (value, target)

  for (int ti = 0; ti < params_.n_trees; ++ti) {
    Rng rng(derive_seed(params_.seed, 0x74726565 /* "tree" */,
                        static_cast<std::uint64_t>(ti)));
    Tree& tree = trees_[static_cast<std::size_t>(ti)];

    // Bootstrap sample.
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = rng.below(n);

    struct Work {
      std::size_t begin, end;  // range in idx
      int node;
      int depth;
    };
    tree.nodes.push_back({});
    std::vector<Work> stack{{0, n, 0, 0}};
    while (!stack.empty()) {
      const Work w = stack.back();
      stack.pop_back();
      Node& node = tree.nodes[static_cast<std::size_t>(w.node)];

      const std::size_t count = w.end - w.begin;
      std::size_t pos = 0;
      for (std::size_t i = w.begin; i < w.end; ++i) pos += targets[idx[i]];
      node.p1 = static_cast<double>(pos) / static_cast<double>(count);

      const bool pure = pos == 0 || pos == count;
      const bool too_small = count < 2 * static_cast<std::size_t>(params_.min_leaf);
      const bool too_deep = params_.max_depth > 0 && w.depth >= params_.max_depth;
      if (pure || too_small || too_deep) continue;

      // Draw mtry distinct candidate features (partial Fisher-Yates).
      std::iota(feature_pool.begin(), feature_pool.end(), 0);
      for (int j = 0; j < mtry; ++j) {
        const auto pick = j + static_cast<int>(rng.below(
                                  static_cast<std::uint64_t>(d - j)));
        std::swap(feature_pool[static_cast<std::size_t>(j)],
                  feature_pool[static_cast<std::size_t>(pick)]);
      }

      SplitCandidate best;
      for (int j = 0; j < mtry; ++j) {
        const int f = feature_pool[static_cast<std::size_t>(j)];
        sorted.clear();
        for (std::size_t i = w.begin; i < w.end; ++i) {
          sorted.emplace_back(features(idx[i], static_cast<std::size_t>(f)),
                              targets[idx[i]]);
        }
        std::sort(sorted.begin(), sorted.end());

        std::size_t left_n = 0, left_pos = 0;
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
          left_n += 1;
          left_pos += sorted[i].second;
          if (sorted[i].first == sorted[i + 1].first) continue;  // no boundary
          if (left_n < static_cast<std::size_t>(params_.min_leaf) ||
              count - left_n < static_cast<std::size_t>(params_.min_leaf)) {
            continue;
          }
          const double dec = gini_decrease(count, pos, left_n, left_pos);
          if (dec > best.impurity_decrease) {
            best.impurity_decrease = dec;
            best.feature = f;
            best.threshold = 0.5 * (sorted[i].first + sorted[i + 1].first);
          }
        }
      }
      if (best.feature < 0) continue;  // all candidates constant

      const auto mid = std::partition(
          idx.begin() + static_cast<std::ptrdiff_t>(w.begin),
          idx.begin() + static_cast<std::ptrdiff_t>(w.end),
          [&](std::size_t i) {
            return features(i, static_cast<std::size_t>(best.feature)) <=
                   best.threshold;
          });
      const auto split = static_cast<std::size_t>(mid - idx.begin());
      if (split == w.begin || split == w.end) continue;  // numeric edge

      const int left = static_cast<int>(tree.nodes.size());
      tree.nodes.push_back({});
      tree.nodes.push_back({});
      // Re-reference: push_back may have reallocated.
      Node& parent = tree.nodes[static_cast<std::size_t>(w.node)];
      parent.feature = best.feature;
      parent.threshold = best.threshold;
      parent.left = left;
      parent.right = left + 1;
      stack.push_back({w.begin, split, left, w.depth + 1});
      stack.push_back({split, w.end, left + 1, w.depth + 1});
    }
  }
}

double RandomForest::predict_row(const Tree& tree, std::span<const double> x) const {
  int node = 0;
  while (tree.nodes[static_cast<std::size_t>(node)].feature >= 0) {
    const Node& nd = tree.nodes[static_cast<std::size_t>(node)];
    node = x[static_cast<std::size_t>(nd.feature)] <= nd.threshold ? nd.left
                                                                   : nd.right;
  }
  return tree.nodes[static_cast<std::size_t>(node)].p1;
}

std::vector<double> RandomForest::predict_proba(const FeatureMatrix& features) const {
  if (trees_.empty()) throw std::logic_error("predict before fit");
  std::vector<double> out(features.rows(), 0.0);
  for (const Tree& tree : trees_) {
    for (std::size_t i = 0; i < features.rows(); ++i) {
      out[i] += predict_row(tree, features.row(i));
    }
  }
  const double inv = 1.0 / static_cast<double>(trees_.size());
  for (double& v : out) v *= inv;
  return out;
}

std::unique_ptr<ProbClassifier> fit_random_forest(
    const FeatureMatrix& features, std::span<const std::uint8_t> targets,
    const ForestParams& params) {
  auto model = std::make_unique<RandomForest>(params);
  model->fit(features, targets);
  return model;
}

}  // namespace scartest
