#include "sylvsum/rational.hpp"

#include <cctype>
#include <utility>

#include "sylvsum/errors.hpp"

namespace sylvsum {
namespace {

bool is_integer_literal(std::string_view text, bool allow_sign) {
  if (allow_sign && !text.empty() && text.front() == '-') {
    text.remove_prefix(1);
  }
  if (text.empty()) {
    return false;
  }
  for (const char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch)) == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw DivisionByZero("rational with zero denominator");
  }
  value_ = mpq_class(numerator, 1);
  value_ /= denominator;
  value_.canonicalize();
}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw DivisionByZero("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text, true)) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  BigInt numerator(std::string(num_text), 10);
  if (slash == std::string_view::npos) {
    return Rational(numerator);
  }
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text, false)) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  BigInt denominator(std::string(den_text), 10);
  if (denominator == 0) {
    throw ParseError("zero denominator: '" + std::string(text) + "'");
  }
  return {numerator, denominator};
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw DivisionByZero("division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

}  // namespace sylvsum
