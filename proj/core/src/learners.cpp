#include "scartest/learners.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "scartest/labeling.hpp"

namespace scartest {

namespace {

void require_both_classes(std::span<const std::uint8_t> targets) {
  bool has0 = false, has1 = false;
  for (auto t : targets) (t ? has1 : has0) = true;
  if (!has0 || !has1) {
    throw std::invalid_argument("fit: both classes must be present");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Gaussian Naive Bayes

GaussianNb::GaussianNb(std::vector<double> mean0, std::vector<double> var0,
                       std::vector<double> mean1, std::vector<double> var1,
                       double prior1)
    : mean0_(std::move(mean0)),
      var0_(std::move(var0)),
      mean1_(std::move(mean1)),
      var1_(std::move(var1)),
      log_prior1_(std::log(prior1)),
      log_prior0_(std::log(1.0 - prior1)) {}

void GaussianNb::fit(const FeatureMatrix& features,
                     std::span<const std::uint8_t> targets) {
  if (targets.size() != features.rows()) {
    throw std::invalid_argument("fit: target length mismatch");
  }
  require_both_classes(targets);
  const std::size_t n = features.rows(), d = features.cols();

  std::size_t n1 = 0;
  for (auto t : targets) n1 += t;
  const std::size_t n0 = n - n1;
  log_prior1_ = std::log(static_cast<double>(n1) / static_cast<double>(n));
  log_prior0_ = std::log(static_cast<double>(n0) / static_cast<double>(n));

  mean0_.assign(d, 0.0);
  mean1_.assign(d, 0.0);
  var0_.assign(d, 0.0);
  var1_.assign(d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = features.row(i);
    auto& m = targets[i] ? mean1_ : mean0_;
    for (std::size_t j = 0; j < d; ++j) m[j] += x[j];
  }
  for (std::size_t j = 0; j < d; ++j) {
    mean0_[j] /= static_cast<double>(n0);
    mean1_[j] /= static_cast<double>(n1);
  }
  std::vector<double> pooled_mean(d, 0.0), pooled_sq(d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = features.row(i);
    auto& m = targets[i] ? mean1_ : mean0_;
    auto& v = targets[i] ? var1_ : var0_;
    for (std::size_t j = 0; j < d; ++j) {
      const double c = x[j] - m[j];
      v[j] += c * c;
      pooled_mean[j] += x[j];
    }
  }
  for (std::size_t j = 0; j < d; ++j) pooled_mean[j] /= static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = features.row(i);
    for (std::size_t j = 0; j < d; ++j) {
      const double c = x[j] - pooled_mean[j];
      pooled_sq[j] += c * c;
    }
  }

  degenerate_ = true;
  for (std::size_t j = 0; j < d; ++j) {
    var0_[j] /= static_cast<double>(n0);
    var1_[j] /= static_cast<double>(n1);
    const double pooled_var = pooled_sq[j] / static_cast<double>(n);
    if (pooled_var > 0.0) degenerate_ = false;
    // Floor keeps constant features scoreable; 1e-12 absolute backstop for
    // features constant across the pooled sample.
    const double floor = std::max(1e-9 * pooled_var, 1e-12);
    var0_[j] = std::max(var0_[j], floor);
    var1_[j] = std::max(var1_[j], floor);
  }
}

std::vector<double> GaussianNb::predict_proba(const FeatureMatrix& features) const {
  if (mean0_.empty()) throw std::logic_error("predict before fit");
  if (features.cols() != mean0_.size()) {
    throw std::invalid_argument("predict: dimension mismatch");
  }
  std::vector<double> out(features.rows());
  for (std::size_t i = 0; i < features.rows(); ++i) {
    const auto x = features.row(i);
    double score = log_prior1_ - log_prior0_;
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double d1 = x[j] - mean1_[j];
      const double d0 = x[j] - mean0_[j];
      score += -0.5 * (std::log(var1_[j]) + d1 * d1 / var1_[j]) +
               0.5 * (std::log(var0_[j]) + d0 * d0 / var0_[j]);
    }
    out[i] = sigmoid(score);
  }
  return out;
}

std::unique_ptr<ProbClassifier> fit_gaussian_nb(
    const FeatureMatrix& features, std::span<const std::uint8_t> targets) {
  auto model = std::make_unique<GaussianNb>();
  model->fit(features, targets);
  return model;
}

// ---------------------------------------------------------------------------
// Logistic regression (damped Newton)

LogisticFit fit_logistic(const FeatureMatrix& features,
                         std::span<const std::uint8_t> targets, double l2) {
  if (targets.size() != features.rows()) {
    throw std::invalid_argument("fit: target length mismatch");
  }
  require_both_classes(targets);
  const auto n = static_cast<Eigen::Index>(features.rows());
  const auto d = static_cast<Eigen::Index>(features.cols());

  Eigen::MatrixXd X(n, d + 1);  // last column: intercept
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto row = features.row(static_cast<std::size_t>(i));
    for (Eigen::Index j = 0; j < d; ++j) X(i, j) = row[static_cast<std::size_t>(j)];
    X(i, d) = 1.0;
  }
  Eigen::VectorXd t(n);
  for (Eigen::Index i = 0; i < n; ++i) t(i) = targets[static_cast<std::size_t>(i)];

  Eigen::VectorXd w = Eigen::VectorXd::Zero(d + 1);
  Eigen::VectorXd penalty = Eigen::VectorXd::Constant(d + 1, l2);
  penalty(d) = 0.0;  // intercept unpenalized

  const auto loss_of = [&](const Eigen::VectorXd& wv) {
    const Eigen::VectorXd z = X * wv;
    double loss = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      // -log p(t|z), written with log1p for stability on both tails.
      const double zi = z(i);
      const double m = zi > 0 ? zi : 0.0;
      loss += m - t(i) * zi + std::log1p(std::exp(-std::abs(zi)));
    }
    return loss + 0.5 * wv.cwiseProduct(penalty).dot(wv);
  };

  constexpr double kGradTol = 1e-6;
  constexpr int kMaxIter = 100;
  LogisticFit fit;
  double loss = loss_of(w);
  for (int it = 0; it < kMaxIter; ++it) {
    const Eigen::VectorXd z = X * w;
    Eigen::VectorXd p(n), wdiag(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      p(i) = sigmoid(z(i));
      wdiag(i) = std::max(p(i) * (1.0 - p(i)), 1e-12);
    }
    const Eigen::VectorXd grad = X.transpose() * (p - t) + penalty.cwiseProduct(w);
    fit.grad_norm = grad.norm();
    fit.iterations = it;
    if (fit.grad_norm < kGradTol) {
      fit.converged = true;
      break;
    }
    Eigen::MatrixXd H = X.transpose() * wdiag.asDiagonal() * X;
    H.diagonal() += penalty;
    H.diagonal().array() += 1e-12;  // guards rank deficiency
    const Eigen::VectorXd step = H.ldlt().solve(grad);

    // Backtracking: halve until the penalized loss stops increasing.
    double scale = 1.0;
    Eigen::VectorXd w_next = w - scale * step;
    double loss_next = loss_of(w_next);
    int halvings = 0;
    while (loss_next > loss && halvings < 50) {
      scale *= 0.5;
      w_next = w - scale * step;
      loss_next = loss_of(w_next);
      ++halvings;
    }
    w = w_next;
    loss = loss_next;
  }
  if (!fit.converged) {
    // Final gradient check; report through the struct rather than throwing,
    // callers decide whether approximate optima are acceptable.
    const Eigen::VectorXd z = X * w;
    Eigen::VectorXd p(n);
    for (Eigen::Index i = 0; i < n; ++i) p(i) = sigmoid(z(i));
    fit.grad_norm = (X.transpose() * (p - t) + penalty.cwiseProduct(w)).norm();
    fit.converged = fit.grad_norm < kGradTol;
    fit.iterations = kMaxIter;
  }

  fit.weights.resize(static_cast<std::size_t>(d));
  for (Eigen::Index j = 0; j < d; ++j) fit.weights[static_cast<std::size_t>(j)] = w(j);
  fit.intercept = w(d);
  return fit;
}

// ---------------------------------------------------------------------------
// ROC AUC

double roc_auc(std::span<const double> scores,
               std::span<const std::uint8_t> labels) {
  if (scores.size() != labels.size()) {
    throw std::invalid_argument("roc_auc: length mismatch");
  }
  std::size_t n1 = 0;
  for (auto l : labels) n1 += l;
  const std::size_t n0 = labels.size() - n1;
  if (n1 == 0 || n0 == 0) {
    throw std::invalid_argument("roc_auc: both label values must be present");
  }

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] < scores[b] || (scores[a] == scores[b] && a < b);
  });

  // Rank sum of positives with midranks for ties:
  // AUC = (R1 - n1(n1+1)/2) / (n1 n0), ties contributing 1/2 a pair.
  double rank_sum_pos = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
    const double midrank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
    for (std::size_t l = i; l < j; ++l) {
      if (labels[order[l]]) rank_sum_pos += midrank;
    }
    i = j;
  }
  const double u = rank_sum_pos - 0.5 * static_cast<double>(n1) *
                                       static_cast<double>(n1 + 1);
  return u / (static_cast<double>(n1) * static_cast<double>(n0));
}

}  // namespace scartest
