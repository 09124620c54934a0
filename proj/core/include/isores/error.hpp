#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isores {

/// Names the invariant or precondition an input violated.
enum class ErrorCode {
  // Signature validation.
  SumMismatch,
  PoleOrderNotMultipleOfK,
  ZeroOrderNotCoprime,
  A1NotGreaterThanMinusK,
  EmptyPoleList,
  LevelTooSmall,
  // Arithmetic and parsing.
  DivisionByZero,
  PartialProductPole,
  SyntaxError,
  InvalidArgument,
  // Enumeration and residue data.
  EmptySubset,
  SubsetOutOfRange,
  EnumerationBoundExceeded,
  ZeroResidue,
  LevelMismatch,
  PreconditionViolation,
  // Spherical metrics.
  InvalidAngles,
  NonGenericAngles,
};

/// Failures that indicate a bug rather than bad input.
enum class InternalCode {
  NonIntegerResult,
  IntegralityFailure,
  ConsistencyFailure,
};

std::string_view to_string(ErrorCode code) noexcept;
std::string_view to_string(InternalCode code) noexcept;

/// Rejected input. The code names the violated invariant.
class Error : public std::invalid_argument {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::invalid_argument(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return to_string(code_); }

 private:
  ErrorCode code_;
};

/// An exact computation produced a value that contradicts a proven property.
class InternalError : public std::logic_error {
 public:
  InternalError(InternalCode code, const std::string& message)
      : std::logic_error(message), code_(code) {}

  InternalCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return to_string(code_); }

 private:
  InternalCode code_;
};

}  // namespace isores
