#include "sympair/errors.hpp"

namespace sympair {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::NonUnit: return "NonUnit";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::BetaMismatch: return "BetaMismatch";
    case ErrorKind::NotUnitNorZero: return "NotUnitNorZero";
    case ErrorKind::NotChainCode: return "NotChainCode";
    case ErrorKind::LengthTooShort: return "LengthTooShort";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::ConstructionRefused: return "ConstructionRefused";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace sympair
