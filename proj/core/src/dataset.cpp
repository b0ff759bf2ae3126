#include "scartest/dataset.hpp"

#include <stdexcept>

namespace scartest {

namespace {

void check_binary(const std::vector<std::uint8_t>& v, const char* name) {
  for (auto b : v) {
    if (b > 1) throw std::invalid_argument(std::string(name) + " must be 0/1");
  }
}

}  // namespace

std::vector<std::size_t> PUDataset::labeled_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> PUDataset::unlabeled_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!s[i]) out.push_back(i);
  return out;
}

void PUDataset::validate() const {
  features.validate();
  if (s.size() != features.rows()) {
    throw std::invalid_argument("PUDataset: label vector length mismatch");
  }
  check_binary(s, "label indicator");
  std::size_t labeled = 0;
  for (auto b : s) labeled += b;
  if (labeled == 0) throw std::invalid_argument("empty labeled set");
  if (labeled == s.size()) throw std::invalid_argument("empty unlabeled set");
}

void OracleDataset::validate() const {
  features.validate();
  if (y.size() != features.rows()) {
    throw std::invalid_argument("OracleDataset: class vector length mismatch");
  }
  check_binary(y, "class");
  if (!s.empty()) {
    if (s.size() != y.size()) {
      throw std::invalid_argument("OracleDataset: label vector length mismatch");
    }
    check_binary(s, "label indicator");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] && !y[i]) {
        throw std::invalid_argument("OracleDataset: labeled negative row");
      }
    }
  }
}

double empirical_prior(const OracleDataset& ds) {
  if (ds.y.empty()) return 0.0;
  std::size_t pos = 0;
  for (auto b : ds.y) pos += b;
  return static_cast<double>(pos) / static_cast<double>(ds.y.size());
}

PUDataset to_pu(const OracleDataset& ds) {
  if (!ds.has_labels()) {
    throw std::invalid_argument("to_pu: dataset has no label indicator");
  }
  PUDataset pu{ds.features, ds.s};
  pu.validate();
  return pu;
}

}  // namespace scartest
