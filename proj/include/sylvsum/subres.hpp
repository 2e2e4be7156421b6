#pragma once

#include "sylvsum/matrix.hpp"
#include "sylvsum/poly.hpp"

namespace sylvsum {

enum class Cofactor { F, G };

/// Numeric part of the k-th subresultant matrix of monic f (degree m) and
/// g (degree n): m+n-2k rows by m+n-2k-1 coefficient columns.
///
/// The first n-k rows are shifted bands of f's coefficients, the remaining
/// m-k rows shifted bands of g's. The polynomial-valued last column is not
/// stored; row i of the top block carries x^(n-k-1-i) (times f) and row i of
/// the bottom block x^(m-k-1-i) (times g).
class SubresMatrix {
 public:
  /// Throws NotMonic or IndexOutOfRange when (f, g, k) is not admissible.
  static SubresMatrix build(const Poly& f, const Poly& g, int k);

  [[nodiscard]] const RationalMatrix& entries() const { return entries_; }
  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] int order() const { return m_ + n_ - 2 * k_; }
  [[nodiscard]] int top_block_rows() const { return n_ - k_; }
  [[nodiscard]] int bottom_block_rows() const { return m_ - k_; }
  /// Exponent of x in the last-column entry of the given row.
  [[nodiscard]] int last_column_exponent(int row) const;

 private:
  SubresMatrix(int m, int n, int k);

  int m_;
  int n_;
  int k_;
  RationalMatrix entries_;
};

/// Throws NotMonic / IndexOutOfRange unless f, g are monic of degree >= 1 and
/// 0 <= k < min(m, n), or k = min(m, n) with m != n.
void check_subres_args(const Poly& f, const Poly& g, int k);

struct CofactorPair {
  Poly F;
  Poly G;
};

/// F_k(f, g) or G_k(f, g): the determinant of the subresultant matrix whose
/// last column keeps only the x-powers of the f rows (F) or of the g rows (G).
Poly cofactor_poly(const Poly& f, const Poly& g, int k, Cofactor which);
CofactorPair cofactors(const Poly& f, const Poly& g, int k);

/// Sres_k(f, g) = F_k(f, g) * f + G_k(f, g) * g.
Poly subresultant(const Poly& f, const Poly& g, int k);

/// Sres_0(f, g) as a scalar.
Rational resultant(const Poly& f, const Poly& g);

/// Coefficient of x^k in Sres_k(f, g); zero when the subresultant is defective.
Rational principal_coeff(const Poly& f, const Poly& g, int k);

}  // namespace sylvsum
