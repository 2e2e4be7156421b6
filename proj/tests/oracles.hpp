#pragma once

// Independent reference computations for the tests. Nothing here calls the
// Bareiss determinant or the cofactor expansion used by the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sylvsum/matrix.hpp"
#include "sylvsum/poly.hpp"

namespace oracle {

using sylvsum::Poly;
using sylvsum::Rational;
using sylvsum::RationalMatrix;

// Recursive Laplace expansion along the first row.
inline Rational naive_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) {
    return Rational(1);
  }
  if (n == 1) {
    return m(0, 0);
  }
  Rational out;
  for (std::size_t col = 0; col < n; ++col) {
    if (m(0, col).is_zero()) {
      continue;
    }
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t dst = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) {
          minor(i - 1, dst++) = m(i, j);
        }
      }
    }
    const Rational term = m(0, col) * naive_det(minor);
    out += (col % 2 == 0) ? term : -term;
  }
  return out;
}

// Sres_k(f, g) straight from the determinant with polynomial last column:
// the coefficient of x^j is the determinant whose last column holds the
// x^j coefficients of x^e f (top rows) and x^e g (bottom rows).
inline Poly sres_by_definition(const Poly& f, const Poly& g, int k) {
  const int m = *f.degree();
  const int n = *g.degree();
  const int size = m + n - 2 * k;
  std::vector<Rational> coeffs(static_cast<std::size_t>(m + n));
  for (int j = 0; j < m + n; ++j) {
    RationalMatrix mat(size, size);
    for (int i = 0; i < n - k; ++i) {
      for (int c = 0; c + 1 < size; ++c) {
        mat(i, c) = f.coeff(m - c + i);
      }
      mat(i, size - 1) = f.coeff(j - (n - k - 1 - i));
    }
    for (int i = 0; i < m - k; ++i) {
      for (int c = 0; c + 1 < size; ++c) {
        mat(n - k + i, c) = g.coeff(n - c + i);
      }
      mat(n - k + i, size - 1) = g.coeff(j - (m - k - 1 - i));
    }
    coeffs[static_cast<std::size_t>(j)] = naive_det(mat);
  }
  return Poly(std::move(coeffs));
}

// Remainder of num by a monic divisor, by schoolbook long division.
inline Poly remainder(const Poly& num, const Poly& monic_divisor) {
  std::vector<Rational> r(num.coeffs().begin(), num.coeffs().end());
  const int d = *monic_divisor.degree();
  for (int top = static_cast<int>(r.size()) - 1; top >= d; --top) {
    const Rational lead = r[static_cast<std::size_t>(top)];
    for (int i = 0; i <= d; ++i) {
      r[static_cast<std::size_t>(top - d + i)] -= lead * monic_divisor.coeff(i);
    }
  }
  if (static_cast<int>(r.size()) > d) {
    r.resize(static_cast<std::size_t>(d));
  }
  return Poly(std::move(r));
}

inline Rational random_rational(std::mt19937_64& rng, long span = 9, long max_den = 5) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, max_den);
  return {num(rng), den(rng)};
}

inline Poly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::vector<Rational> coeffs(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& c : coeffs) {
    c = random_rational(rng);
  }
  return Poly(std::move(coeffs));
}

inline RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  RationalMatrix m(n, n);
  std::bernoulli_distribution zero(0.2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = zero(rng) ? Rational() : random_rational(rng);
    }
  }
  return m;
}

// Distinct rationals with small numerators and denominators.
inline std::vector<Rational> distinct_rationals(std::mt19937_64& rng, int count) {
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < count) {
    const Rational r = random_rational(rng, 12, 3);
    if (std::find(out.begin(), out.end(), r) == out.end()) {
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace oracle
