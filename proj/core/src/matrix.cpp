#include "scartest/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace scartest {

FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t cols,
                             std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows * cols) {
    throw std::invalid_argument("FeatureMatrix: value count " +
                                std::to_string(values_.size()) +
                                " does not match shape " +
                                std::to_string(rows) + "x" + std::to_string(cols));
  }
}

FeatureMatrix FeatureMatrix::take_rows(std::span<const std::size_t> indices) const {
  FeatureMatrix out(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const auto src = row(indices[i]);
    auto dst = out.row(i);
    for (std::size_t j = 0; j < cols_; ++j) dst[j] = src[j];
  }
  return out;
}

std::vector<double> FeatureMatrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void FeatureMatrix::validate() const {
  if (rows_ == 0 || cols_ == 0) {
    throw std::invalid_argument("FeatureMatrix: empty shape");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("FeatureMatrix: non-finite entry");
    }
  }
}

}  // namespace scartest
