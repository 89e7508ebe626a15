#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sympair {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  FieldMismatch,
  ZeroElement,
  NonUnit,
  RingMismatch,
  ExponentOutOfRange,
  ZeroPolynomial,
  ConstraintViolation,
  BetaMismatch,
  NotUnitNorZero,
  NotChainCode,
  LengthTooShort,
  DegenerateInput,
  ConstructionRefused,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sympair
