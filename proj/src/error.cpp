#include "simplex/error.hpp"

namespace simplex {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::ClosureViolation: return "ClosureViolation";
    case ErrorKind::NonPositiveLength: return "NonPositiveLength";
    case ErrorKind::ArityTooSmall: return "ArityTooSmall";
    case ErrorKind::InfeasibleInput: return "InfeasibleInput";
    case ErrorKind::AngleDegenerate: return "AngleDegenerate";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::RoundTripFailure: return "RoundTripFailure";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
  }
  return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace simplex
