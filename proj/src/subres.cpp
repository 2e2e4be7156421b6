#include "sylvsum/subres.hpp"

#include <algorithm>
#include <string>

#include "sylvsum/errors.hpp"

namespace sylvsum {

void check_subres_args(const Poly& f, const Poly& g, int k) {
  if (!f.is_monic() || !g.is_monic()) {
    throw NotMonic("subresultant inputs must be monic");
  }
  const int m = *f.degree();
  const int n = *g.degree();
  if (m < 1 || n < 1) {
    throw IndexOutOfRange("subresultant inputs must have degree >= 1");
  }
  const int lo = std::min(m, n);
  const bool admissible = k >= 0 && (k < lo || (k == lo && m != n));
  if (!admissible) {
    throw IndexOutOfRange("subresultant index k=" + std::to_string(k) + " out of range for degrees (" +
                          std::to_string(m) + ", " + std::to_string(n) + ")");
  }
}

SubresMatrix::SubresMatrix(int m, int n, int k)
    : m_(m),
      n_(n),
      k_(k),
      entries_(static_cast<std::size_t>(m + n - 2 * k), static_cast<std::size_t>(m + n - 2 * k - 1)) {}

SubresMatrix SubresMatrix::build(const Poly& f, const Poly& g, int k) {
  check_subres_args(f, g, k);
  SubresMatrix out(*f.degree(), *g.degree(), k);
  const int cols = out.order() - 1;
  for (int i = 0; i < out.top_block_rows(); ++i) {
    for (int j = 0; j < cols; ++j) {
      out.entries_(i, j) = f.coeff(out.m_ - (j - i));
    }
  }
  for (int i = 0; i < out.bottom_block_rows(); ++i) {
    const auto row = static_cast<std::size_t>(out.top_block_rows() + i);
    for (int j = 0; j < cols; ++j) {
      out.entries_(row, j) = g.coeff(out.n_ - (j - i));
    }
  }
  return out;
}

int SubresMatrix::last_column_exponent(int row) const {
  if (row < top_block_rows()) {
    return n_ - k_ - 1 - row;
  }
  return m_ - k_ - 1 - (row - top_block_rows());
}

namespace {

// Laplace expansion along the last column restricted to one block.
Poly expand_block(const SubresMatrix& matrix, int first_row, int row_count) {
  const int last_col = matrix.order() - 1;
  Poly out;
  for (int row = first_row; row < first_row + row_count; ++row) {
    const Rational minor = fraction_free_det(matrix.entries().without_row(static_cast<std::size_t>(row)));
    if (minor.is_zero()) {
      continue;
    }
    const Rational signed_minor = sign_power(row + last_col) > 0 ? minor : -minor;
    out += Poly::monomial(signed_minor, matrix.last_column_exponent(row));
  }
  return out;
}

}  // namespace

Poly cofactor_poly(const Poly& f, const Poly& g, int k, Cofactor which) {
  const auto matrix = SubresMatrix::build(f, g, k);
  if (which == Cofactor::F) {
    return expand_block(matrix, 0, matrix.top_block_rows());
  }
  return expand_block(matrix, matrix.top_block_rows(), matrix.bottom_block_rows());
}

CofactorPair cofactors(const Poly& f, const Poly& g, int k) {
  const auto matrix = SubresMatrix::build(f, g, k);
  return {expand_block(matrix, 0, matrix.top_block_rows()),
          expand_block(matrix, matrix.top_block_rows(), matrix.bottom_block_rows())};
}

Poly subresultant(const Poly& f, const Poly& g, int k) {
  const auto [F, G] = cofactors(f, g, k);
  return F * f + G * g;
}

Rational resultant(const Poly& f, const Poly& g) { return subresultant(f, g, 0).coeff(0); }

Rational principal_coeff(const Poly& f, const Poly& g, int k) { return subresultant(f, g, k).coeff(k); }

}  // namespace sylvsum
