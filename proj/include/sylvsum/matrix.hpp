#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "sylvsum/rational.hpp"

namespace sylvsum {

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Copy with one row removed.
  [[nodiscard]] RationalMatrix without_row(std::size_t row) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Each row is first scaled by the lcm of its denominators so elimination
/// runs over integers; the product of the scale factors is divided out at
/// the end. The 0x0 determinant is 1. Throws std::invalid_argument for a
/// non-square matrix.
Rational fraction_free_det(const RationalMatrix& matrix);

}  // namespace sylvsum
