#include "sylvsum/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace sylvsum {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("ragged matrix literal");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::without_row(std::size_t row) const {
  RationalMatrix out(rows_ - 1, cols_);
  std::size_t dst = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i == row) {
      continue;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      out(dst, j) = (*this)(i, j);
    }
    ++dst;
  }
  return out;
}

Rational fraction_free_det(const RationalMatrix& matrix) {
  if (!matrix.is_square()) {
    throw std::invalid_argument("determinant of a non-square matrix");
  }
  const std::size_t n = matrix.rows();
  if (n == 0) {
    return Rational(1);
  }

  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      const BigInt den = matrix(i, j).denominator();
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& entry = matrix(i, j);
      a[i][j] = entry.numerator() * (row_lcm / entry.denominator());
    }
    scale *= row_lcm;
  }

  int sign = 1;
  BigInt previous_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) {
        ++swap_row;
      }
      if (swap_row == n) {
        return {};
      }
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt value = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        // Sylvester's identity guarantees this division is exact.
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous_pivot.get_mpz_t());
        a[i][j] = std::move(value);
      }
      a[i][k] = 0;
    }
    previous_pivot = a[k][k];
  }
  BigInt det = a[n - 1][n - 1];
  if (sign < 0) {
    det = -det;
  }
  return {det, scale};
}

}  // namespace sylvsum
