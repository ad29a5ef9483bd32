#include "dpdf/error.hpp"

namespace dpdf {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::LogOfZero: return "LogOfZero";
    case ErrorCode::EmptyOrders: return "EmptyOrders";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::ZeroInSet: return "ZeroInSet";
    case ErrorCode::UnequalSizes: return "UnequalSizes";
    case ErrorCode::ZeroInT: return "ZeroInT";
    case ErrorCode::BadDivisor: return "BadDivisor";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BadEpsilon: return "BadEpsilon";
    case ErrorCode::NoRepresentation: return "NoRepresentation";
    case ErrorCode::UnsupportedE: return "UnsupportedE";
    case ErrorCode::NotUniform: return "NotUniform";
    case ErrorCode::BadIndexSet: return "BadIndexSet";
    case ErrorCode::OverlappingIndexSets: return "OverlappingIndexSets";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::ParameterMismatch: return "ParameterMismatch";
    case ErrorCode::NotPDS: return "NotPDS";
    case ErrorCode::NotASubfieldIndex: return "NotASubfieldIndex";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IOFailure: return "IOFailure";
    case ErrorCode::VerificationMismatch: return "VerificationMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace dpdf
