#pragma once

#include <stdexcept>
#include <string>

namespace gcpoly {

enum class ErrorCode {
  ZeroInverse,
  DegreeMismatch,
  NonMultilinear,
  BudgetExceeded,
  SizeLimit,
  PreconditionViolated,
  NotHomomorphism,
  TupleNotSorted,
  NotAdmissible,
  ConductorMismatch,
  SyntaxError,
  UnknownGroupElement,
  InvalidInput,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NonMultilinear: return "NonMultilinear";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::TupleNotSorted: return "TupleNotSorted";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::ConductorMismatch: return "ConductorMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownGroupElement: return "UnknownGroupElement";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode c, const std::string& msg) {
  throw Error(c, msg);
}

}  // namespace gcpoly
