#pragma once

#include <stdexcept>
#include <string>

namespace quiverdt {

// Base class for all domain errors raised by the library. Plain
// precondition violations (bad sizes, out-of-range arguments) use
// std::invalid_argument directly.
class CalcError : public std::runtime_error {
public:
  explicit CalcError(const std::string& msg) : std::runtime_error(msg) {}
};

class ExponentOverflow : public CalcError {
public:
  using CalcError::CalcError;
};

class DivisionByZero : public CalcError {
public:
  using CalcError::CalcError;
};

class LengthMismatch : public CalcError {
public:
  using CalcError::CalcError;
};

class ZeroDimension : public CalcError {
public:
  using CalcError::CalcError;
};

class NegativeArrowCount : public CalcError {
public:
  using CalcError::CalcError;
};

class NotSymmetric : public CalcError {
public:
  using CalcError::CalcError;
};

class TruncationMismatch : public CalcError {
public:
  using CalcError::CalcError;
};

class NonUnitConstantTerm : public CalcError {
public:
  using CalcError::CalcError;
};

class NonzeroConstantTerm : public CalcError {
public:
  using CalcError::CalcError;
};

class ConstantTermNotOne : public CalcError {
public:
  using CalcError::CalcError;
};

// A plethystic Exp/Log result kept a nontrivial integer denominator.
// This indicates a convention bug upstream, not a user error.
class NonIntegralResult : public CalcError {
public:
  using CalcError::CalcError;
};

class NonIntegralInput : public CalcError {
public:
  using CalcError::CalcError;
};

class NonExactDivision : public CalcError {
public:
  using CalcError::CalcError;
};

class NonGenericStability : public CalcError {
public:
  using CalcError::CalcError;
};

// Raised when a quiver description file fails to parse or validate.
class QuiverInputError : public CalcError {
public:
  using CalcError::CalcError;
};

}  // namespace quiverdt
