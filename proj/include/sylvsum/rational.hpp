#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace sylvsum {

using BigInt = mpz_class;

/// Exact rational number in canonical form: positive denominator and
/// numerator coprime to it. Every constructor and operator restores the
/// canonical form, so equality is a plain structural comparison.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(const BigInt& value) : value_(value) {}
  Rational(const BigInt& numerator, const BigInt& denominator);
  explicit Rational(mpq_class value);

  /// Accepts "n" or "n/d" with an optional leading '-' on n and d > 0.
  /// Non-reduced input such as "4/6" is accepted and canonicalized.
  static Rational parse(std::string_view text);

  /// "n" when the denominator is 1, otherwise "n/d".
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] const mpq_class& value() const { return value_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DivisionByZero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

/// (-1)^exponent for a possibly negative exponent.
inline int sign_power(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace sylvsum
