#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dpdf {

enum class ErrorCode {
  NotPrime,
  DegreeZero,
  BoundExceeded,
  DivisionByZero,
  LogOfZero,
  EmptyOrders,
  BadOrder,
  NotDisjoint,
  ZeroInSet,
  UnequalSizes,
  ZeroInT,
  BadDivisor,
  IndexOutOfRange,
  BadEpsilon,
  NoRepresentation,
  UnsupportedE,
  NotUniform,
  BadIndexSet,
  OverlappingIndexSets,
  NotApplicable,
  ParameterMismatch,
  NotPDS,
  NotASubfieldIndex,
  ParseError,
  IOFailure,
  VerificationMismatch,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace dpdf
