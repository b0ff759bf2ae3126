#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace scartest {

/**
 * Dense row-major matrix of 64-bit reals holding one feature vector per row.
 * Entries are expected to be finite; validate() enforces it at ingestion
 * boundaries (CSV parsing), generators produce finite values by construction.
 */
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}
  FeatureMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t r, std::size_t c) const {
    return values_[r * cols_ + c];
  }
  double& operator()(std::size_t r, std::size_t c) {
    return values_[r * cols_ + c];
  }

  std::span<const double> row(std::size_t r) const {
    return {values_.data() + r * cols_, cols_};
  }
  std::span<double> row(std::size_t r) {
    return {values_.data() + r * cols_, cols_};
  }

  const std::vector<double>& values() const { return values_; }

  /// Copies the listed rows, preserving the given order.
  FeatureMatrix take_rows(std::span<const std::size_t> indices) const;

  /// One column as a contiguous vector.
  std::vector<double> column(std::size_t c) const;

  /// Throws std::invalid_argument on NaN/Inf entries or an empty shape.
  void validate() const;

  bool operator==(const FeatureMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

}  // namespace scartest
