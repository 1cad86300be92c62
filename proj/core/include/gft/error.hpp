#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gft {

enum class ErrorCode {
  ZeroBase,
  SingularPoint,
  OrderOutOfRange,
  DivisionByZeroInFunctional,
  MissingSecondFunction,
  DegenerateSum,
  DegenerateAngle,
  DegenerateDenominator,
  OutOfRange,
  DiskRequiresLambdaZero,
  InvalidBracket,
  NoSignChange,
  BadGridSpec,
  BadFamilySpec,
  EvaluationError,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `code()` identifies the contract that
/// was violated; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gft
