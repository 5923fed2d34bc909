#pragma once

#include <stdexcept>
#include <string>

namespace simplex {

enum class ErrorKind {
  DimensionMismatch,
  NonFinite,
  ClosureViolation,
  NonPositiveLength,
  ArityTooSmall,
  InfeasibleInput,
  AngleDegenerate,
  NotPositive,
  RoundTripFailure,
  ParseError,
  ValidationError,
  UnsupportedDimension,
};

const char* to_string(ErrorKind kind) noexcept;

/// Exception carrying a machine-readable kind; the CLI maps kinds to
/// process exit codes and JSON error objects.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace simplex
