#pragma once

#include <stdexcept>
#include <string>

namespace q6j {

enum class ErrorCode {
  NonIntegerDifference,
  ZeroFactor,
  HalfIntegerColor,
  SingularMatrix,
  InadmissibleTriple,
  IntegralityViolation,
  EmptyRange,
  AngleSumViolation,
  NonHyperbolicGram,
  RootOffUnitCircle,
  IntervalViolation,
  NonScalarOperator,
  NoStates,
  ExtrapolationUnstable,
  BadDiagram,
  BadInput,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonIntegerDifference: return "NonIntegerDifference";
    case ErrorCode::ZeroFactor: return "ZeroFactor";
    case ErrorCode::HalfIntegerColor: return "HalfIntegerColor";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::InadmissibleTriple: return "InadmissibleTriple";
    case ErrorCode::IntegralityViolation: return "IntegralityViolation";
    case ErrorCode::EmptyRange: return "EmptyRange";
    case ErrorCode::AngleSumViolation: return "AngleSumViolation";
    case ErrorCode::NonHyperbolicGram: return "NonHyperbolicGram";
    case ErrorCode::RootOffUnitCircle: return "RootOffUnitCircle";
    case ErrorCode::IntervalViolation: return "IntervalViolation";
    case ErrorCode::NonScalarOperator: return "NonScalarOperator";
    case ErrorCode::NoStates: return "NoStates";
    case ErrorCode::ExtrapolationUnstable: return "ExtrapolationUnstable";
    case ErrorCode::BadDiagram: return "BadDiagram";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace q6j
