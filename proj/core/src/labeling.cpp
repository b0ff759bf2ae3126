#include "scartest/labeling.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "scartest/csv.hpp"
#include "scartest/learners.hpp"
#include "scartest/rng.hpp"

namespace scartest {

double sigmoid(double s) {
  if (s >= 0.0) {
    return 1.0 / (1.0 + std::exp(-s));
  }
  const double e = std::exp(s);
  return e / (1.0 + e);
}

double logit(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("logit: p outside (0,1)");
  return std::log(p / (1.0 - p));
}

const char* strategy_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kS0: return "s0";
    case StrategyKind::kS1: return "s1";
    case StrategyKind::kS2: return "s2";
    case StrategyKind::kS3: return "s3";
  }
  return "?";
}

StrategyKind parse_strategy(const std::string& name) {
  if (name == "s0" || name == "S0") return StrategyKind::kS0;
  if (name == "s1" || name == "S1") return StrategyKind::kS1;
  if (name == "s2" || name == "S2") return StrategyKind::kS2;
  if (name == "s3" || name == "S3") return StrategyKind::kS3;
  throw std::invalid_argument("unknown labeling strategy '" + name + "'");
}

namespace {

double linear_score(const PropensityStrategy& st, std::span<const double> x) {
  if (st.beta.size() > x.size()) {
    throw std::invalid_argument("propensity: feature row shorter than beta");
  }
  double dot = 0.0;
  for (std::size_t j = 0; j < st.beta.size(); ++j) dot += st.beta[j] * x[j];
  return st.g * dot + st.a;
}

int strategy_exponent(StrategyKind kind) {
  return kind == StrategyKind::kS3 ? 10 : 1;
}

}  // namespace

double evaluate_propensity(const PropensityStrategy& st, std::span<const double> x) {
  switch (st.kind) {
    case StrategyKind::kS0:
      return st.c;
    case StrategyKind::kS1:
      if (x.empty()) throw std::invalid_argument("propensity: empty feature row");
      return sigmoid(st.g * x[0]);
    case StrategyKind::kS2:
    case StrategyKind::kS3: {
      if (st.beta.empty()) {
        throw std::invalid_argument("propensity: S2/S3 require beta and intercept");
      }
      const double p = sigmoid(linear_score(st, x));
      return st.kind == StrategyKind::kS2 ? p : std::pow(p, 10);
    }
  }
  throw std::logic_error("unreachable");
}

double calibrate_intercept(const FeatureMatrix& positives,
                           std::span<const double> beta, double g,
                           double c_target, int exponent) {
  if (positives.rows() == 0) {
    throw std::invalid_argument("calibrate_intercept: no positive rows");
  }
  if (!(c_target > 0.0 && c_target < 1.0)) {
    throw std::invalid_argument("calibrate_intercept: c_target outside (0,1)");
  }
  if (exponent != 1 && exponent != 10) {
    throw std::invalid_argument("calibrate_intercept: exponent must be 1 or 10");
  }

  // Per-row linear part without the intercept; the mean propensity is then a
  // strictly increasing function of a alone.
  std::vector<double> base(positives.rows());
  for (std::size_t i = 0; i < positives.rows(); ++i) {
    const auto x = positives.row(i);
    double dot = 0.0;
    for (std::size_t j = 0; j < beta.size() && j < x.size(); ++j) dot += beta[j] * x[j];
    base[i] = g * dot;
  }
  const auto mean_propensity = [&](double a) {
    double sum = 0.0;
    for (double b : base) {
      const double p = sigmoid(b + a);
      sum += exponent == 1 ? p : std::pow(p, 10);
    }
    return sum / static_cast<double>(base.size());
  };

  double lo = -40.0, hi = 40.0;
  constexpr double kTol = 1e-6;
  constexpr int kMaxIter = 200;
  if (mean_propensity(lo) > c_target || mean_propensity(hi) < c_target) {
    throw std::runtime_error("calibrate_intercept: target outside bracket");
  }
  for (int it = 0; it < kMaxIter; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double m = mean_propensity(mid);
    if (std::abs(m - c_target) <= kTol) return mid;
    (m < c_target ? lo : hi) = mid;
  }
  throw std::runtime_error("calibrate_intercept: no convergence after 200 iterations");
}

PropensityStrategy calibrate_strategy(StrategyKind kind, double g, double c_target,
                                      const OracleDataset& ds, double l2) {
  PropensityStrategy st;
  st.kind = kind;
  st.c = c_target;
  st.g = g;
  if (kind == StrategyKind::kS0 || kind == StrategyKind::kS1) return st;

  const LogisticFit fit = fit_logistic(ds.features, ds.y, l2);
  st.beta = fit.weights;

  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < ds.y.size(); ++i)
    if (ds.y[i]) pos.push_back(i);
  if (pos.empty()) throw std::invalid_argument("calibrate_strategy: no positives");
  const FeatureMatrix positives = ds.features.take_rows(pos);
  st.a = calibrate_intercept(positives, st.beta, g, c_target,
                             strategy_exponent(kind));
  return st;
}

OracleDataset apply_labeling(const OracleDataset& ds,
                             const PropensityStrategy& strategy,
                             std::uint64_t seed) {
  OracleDataset out = ds;
  out.s.assign(ds.size(), 0);
  Rng rng(derive_seed(seed, 0x6c6162 /* "lab" */));
  std::size_t labeled = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (!ds.y[i]) continue;  // negatives are never labeled
    const double e = evaluate_propensity(strategy, ds.features.row(i));
    if (rng.bernoulli(e)) {
      out.s[i] = 1;
      ++labeled;
    }
  }
  if (labeled == 0) {
    throw std::runtime_error("apply_labeling: empty labeled set");
  }
  return out;
}

std::string PropensityStrategy::to_text() const {
  std::ostringstream out;
  out << "kind=" << strategy_name(kind) << '\n';
  out << "c=" << format_double(c) << '\n';
  out << "g=" << format_double(g) << '\n';
  out << "a=" << format_double(a) << '\n';
  out << "beta=";
  for (std::size_t j = 0; j < beta.size(); ++j) {
    if (j) out << ',';
    out << format_double(beta[j]);
  }
  out << '\n';
  return out.str();
}

PropensityStrategy PropensityStrategy::from_text(const std::string& text) {
  PropensityStrategy st;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("strategy text: missing '=' in line '" + line + "'");
    }
    const std::string key = line.substr(0, eq);
    const std::string val = line.substr(eq + 1);
    if (key == "kind") {
      st.kind = parse_strategy(val);
    } else if (key == "c") {
      st.c = std::stod(val);
    } else if (key == "g") {
      st.g = std::stod(val);
    } else if (key == "a") {
      st.a = std::stod(val);
    } else if (key == "beta") {
      st.beta.clear();
      std::istringstream bs(val);
      std::string tok;
      while (std::getline(bs, tok, ',')) {
        if (!tok.empty()) st.beta.push_back(std::stod(tok));
      }
    } else {
      throw std::invalid_argument("strategy text: unknown key '" + key + "'");
    }
  }
  return st;
}

}  // namespace scartest
