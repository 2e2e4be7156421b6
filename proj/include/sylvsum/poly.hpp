#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sylvsum/rational.hpp"

namespace sylvsum {

/// Dense univariate polynomial in x over the rationals.
///
/// Coefficients are stored in ascending order (coeffs()[j] multiplies x^j)
/// with trailing zeros stripped on construction. The zero polynomial has no
/// coefficients and no degree: degree() returns std::nullopt for it.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  /// c * x^degree.
  static Poly monomial(const Rational& c, int degree);

  [[nodiscard]] std::optional<int> degree() const;
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_monic() const;
  [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }

  /// Coefficient of x^j; zero for j < 0 or j above the degree.
  [[nodiscard]] Rational coeff(int j) const;
  /// Leading coefficient; zero for the zero polynomial.
  [[nodiscard]] Rational leading() const;

  /// Horner evaluation.
  [[nodiscard]] Rational eval(const Rational& x0) const;
  [[nodiscard]] Rational operator()(const Rational& x0) const { return eval(x0); }

  /// Exact quotient by (x - root). Throws NonzeroRemainder when root is not
  /// a root of this polynomial.
  [[nodiscard]] Poly div_linear(const Rational& root) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& scalar);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Rational& lhs, Poly rhs) { return rhs *= lhs; }
  Poly operator-() const;

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Human-readable rendering, e.g. "x^2 - 3*x + 2".
  [[nodiscard]] std::string to_string() const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

/// Monic polynomial prod (x - r) over the given roots; 1 for no roots.
Poly poly_from_roots(std::span<const Rational> roots);

}  // namespace sylvsum
