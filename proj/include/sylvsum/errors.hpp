#pragma once

#include <stdexcept>
#include <string>

namespace sylvsum {

// Malformed text or JSON input for a Rational, Poly or RootList.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Base for every error caused by mathematically invalid input. The CLI maps
// the whole family to exit code 3.
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonzeroRemainder : public MathError {
 public:
  using MathError::MathError;
};

class IndexOutOfRange : public MathError {
 public:
  using MathError::MathError;
};

class NotMonic : public MathError {
 public:
  using MathError::MathError;
};

class DuplicateRoots : public MathError {
 public:
  using MathError::MathError;
};

class BoundTooSmall : public MathError {
 public:
  using MathError::MathError;
};

class NegativeN : public MathError {
 public:
  using MathError::MathError;
};

// Theorem classification requires m <= n.
class Unordered : public MathError {
 public:
  using MathError::MathError;
};

class DivisionByZero : public MathError {
 public:
  using MathError::MathError;
};

}  // namespace sylvsum
