#include "sylvsum/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "sylvsum/errors.hpp"

namespace sylvsum {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  if (degree < 0) {
    throw IndexOutOfRange("monomial degree must be non-negative");
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Poly(std::move(coeffs));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) {
    coeffs_.pop_back();
  }
}

std::optional<int> Poly::degree() const {
  if (coeffs_.empty()) {
    return std::nullopt;
  }
  return static_cast<int>(coeffs_.size()) - 1;
}

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == Rational(1); }

Rational Poly::coeff(int j) const {
  if (j < 0 || static_cast<std::size_t>(j) >= coeffs_.size()) {
    return {};
  }
  return coeffs_[static_cast<std::size_t>(j)];
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Rational Poly::eval(const Rational& x0) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x0;
    acc += *it;
  }
  return acc;
}

Poly Poly::div_linear(const Rational& root) const {
  if (coeffs_.empty()) {
    return {};
  }
  // Synthetic division, top coefficient down.
  std::vector<Rational> quotient(coeffs_.size() - 1);
  Rational carry;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    carry = carry * root + coeffs_[i];
    if (i > 0) {
      quotient[i - 1] = carry;
    }
  }
  if (!carry.is_zero()) {
    throw NonzeroRemainder("division by (x - " + root.to_string() + ") leaves remainder " +
                           carry.to_string());
  }
  return Poly(std::move(quotient));
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  normalize();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) {
    return {};
  }
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) {
    c *= scalar;
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) {
    c = -c;
  }
  return out;
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) {
      continue;
    }
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (first) {
      os << (negative ? "-" : "");
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = magnitude == Rational(1);
    if (i == 0) {
      os << magnitude.to_string();
      continue;
    }
    if (!unit) {
      os << magnitude.to_string() << "*";
    }
    os << "x";
    if (i > 1) {
      os << "^" << i;
    }
  }
  return os.str();
}

Poly poly_from_roots(std::span<const Rational> roots) {
  std::vector<Rational> coeffs{Rational(1)};
  coeffs.reserve(roots.size() + 1);
  for (const Rational& r : roots) {
    // Multiply in place by (x - r).
    coeffs.emplace_back(0);
    for (std::size_t i = coeffs.size() - 1; i > 0; --i) {
      coeffs[i] = coeffs[i - 1] - r * coeffs[i];
    }
    coeffs[0] = -(r * coeffs[0]);
  }
  return Poly(std::move(coeffs));
}

}  // namespace sylvsum
