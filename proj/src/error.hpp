#pragma once

#include <stdexcept>
#include <string>

namespace nfrob {

enum class ErrorCode {
  WrongRing,
  DimensionMismatch,
  Singular,
  NotUnimodular,
  NotCentral,
  NoSolution,
  InfiniteDimensional,
  LimitExceeded,
  NotPrime,
  DeterministicTooLarge,
  ParseError,
  ValidationError,
  InvalidArgument,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::WrongRing: return "WrongRing";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::InfiniteDimensional: return "InfiniteDimensional";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DeterministicTooLarge: return "DeterministicTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace nfrob
