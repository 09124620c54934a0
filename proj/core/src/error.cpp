#include "isores/error.hpp"

namespace isores {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SumMismatch: return "SumMismatch";
    case ErrorCode::PoleOrderNotMultipleOfK: return "PoleOrderNotMultipleOfK";
    case ErrorCode::ZeroOrderNotCoprime: return "ZeroOrderNotCoprime";
    case ErrorCode::A1NotGreaterThanMinusK: return "A1NotGreaterThanMinusK";
    case ErrorCode::EmptyPoleList: return "EmptyPoleList";
    case ErrorCode::LevelTooSmall: return "LevelTooSmall";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PartialProductPole: return "PartialProductPole";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::SubsetOutOfRange: return "SubsetOutOfRange";
    case ErrorCode::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case ErrorCode::ZeroResidue: return "ZeroResidue";
    case ErrorCode::LevelMismatch: return "LevelMismatch";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::InvalidAngles: return "InvalidAngles";
    case ErrorCode::NonGenericAngles: return "NonGenericAngles";
  }
  return "Unknown";
}

std::string_view to_string(InternalCode code) noexcept {
  switch (code) {
    case InternalCode::NonIntegerResult: return "NonIntegerResult";
    case InternalCode::IntegralityFailure: return "IntegralityFailure";
    case InternalCode::ConsistencyFailure: return "ConsistencyFailure";
  }
  return "Unknown";
}

}  // namespace isores
