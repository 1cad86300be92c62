#include "gft/error.hpp"

namespace gft {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroBase: return "ZeroBase";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorCode::DivisionByZeroInFunctional: return "DivisionByZeroInFunctional";
    case ErrorCode::MissingSecondFunction: return "MissingSecondFunction";
    case ErrorCode::DegenerateSum: return "DegenerateSum";
    case ErrorCode::DegenerateAngle: return "DegenerateAngle";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DiskRequiresLambdaZero: return "DiskRequiresLambdaZero";
    case ErrorCode::InvalidBracket: return "InvalidBracket";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::BadGridSpec: return "BadGridSpec";
    case ErrorCode::BadFamilySpec: return "BadFamilySpec";
    case ErrorCode::EvaluationError: return "EvaluationError";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace gft
