#pragma once

#include <stdexcept>
#include <string>

namespace zetaforge {

enum class ErrorCode {
  DivisionByZero,
  MissingAssignment,
  RankTooLarge,
  PlaceMismatch,
  OutOfRecursionRange,
  UnclassifiedCase,
  IndexOutOfRange,
  NonIntegralPower,
  InvalidContext,
  ParseError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MissingAssignment: return "MissingAssignment";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::PlaceMismatch: return "PlaceMismatch";
    case ErrorCode::OutOfRecursionRange: return "OutOfRecursionRange";
    case ErrorCode::UnclassifiedCase: return "UnclassifiedCase";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonIntegralPower: return "NonIntegralPower";
    case ErrorCode::InvalidContext: return "InvalidContext";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class ZfError : public std::runtime_error {
 public:
  ZfError(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code),
        message_(msg) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }
  // The bare message, without the code prefix carried by what().
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace zetaforge
