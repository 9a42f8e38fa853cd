#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trisect {

enum class ErrorCode {
  // malformed or invalid input data
  Parse,
  VectorLength,
  CommonIndexMismatch,
  UnknownField,
  InvalidDiagram,
  NotSymmetric,
  MissingGeo,
  MalformedWord,
  DanglingDart,
  InvalidFraction,
  InvalidParams,
  // well-formed input that violates an operation's precondition
  NotUnimodular,
  NotSL3,
  FormUndefined,
  NotNeighbors,
  InvalidTriple,
  CellDecompositionMismatch,
  ModeMismatch,
  BoundaryNotSupported,
  CannotDestabilize,
  UnequalArcs,
  IllegalMove,
  NotApplicable,
};

enum class ErrorCategory { InvalidInput, Precondition };

constexpr auto category_of(ErrorCode code) -> ErrorCategory {
  switch (code) {
  case ErrorCode::Parse:
  case ErrorCode::VectorLength:
  case ErrorCode::CommonIndexMismatch:
  case ErrorCode::UnknownField:
  case ErrorCode::InvalidDiagram:
  case ErrorCode::NotSymmetric:
  case ErrorCode::MissingGeo:
  case ErrorCode::MalformedWord:
  case ErrorCode::DanglingDart:
  case ErrorCode::InvalidFraction:
  case ErrorCode::InvalidParams:
    return ErrorCategory::InvalidInput;
  default:
    return ErrorCategory::Precondition;
  }
}

constexpr auto to_string(ErrorCode code) -> std::string_view {
  switch (code) {
  case ErrorCode::Parse: return "Parse";
  case ErrorCode::VectorLength: return "VectorLength";
  case ErrorCode::CommonIndexMismatch: return "CommonIndexMismatch";
  case ErrorCode::UnknownField: return "UnknownField";
  case ErrorCode::InvalidDiagram: return "InvalidDiagram";
  case ErrorCode::NotSymmetric: return "NotSymmetric";
  case ErrorCode::MissingGeo: return "MissingGeo";
  case ErrorCode::MalformedWord: return "MalformedWord";
  case ErrorCode::DanglingDart: return "DanglingDart";
  case ErrorCode::InvalidFraction: return "InvalidFraction";
  case ErrorCode::InvalidParams: return "InvalidParams";
  case ErrorCode::NotUnimodular: return "NotUnimodular";
  case ErrorCode::NotSL3: return "NotSL3";
  case ErrorCode::FormUndefined: return "FormUndefined";
  case ErrorCode::NotNeighbors: return "NotNeighbors";
  case ErrorCode::InvalidTriple: return "InvalidTriple";
  case ErrorCode::CellDecompositionMismatch: return "CellDecompositionMismatch";
  case ErrorCode::ModeMismatch: return "ModeMismatch";
  case ErrorCode::BoundaryNotSupported: return "BoundaryNotSupported";
  case ErrorCode::CannotDestabilize: return "CannotDestabilize";
  case ErrorCode::UnequalArcs: return "UnequalArcs";
  case ErrorCode::IllegalMove: return "IllegalMove";
  case ErrorCode::NotApplicable: return "NotApplicable";
  }
  return "Unknown";
}

/// Every failure raised by the library. `code()` says what went wrong;
/// `category()` separates bad input from unmet operation preconditions.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  [[nodiscard]] auto code() const noexcept -> ErrorCode { return code_; }
  [[nodiscard]] auto category() const noexcept -> ErrorCategory {
    return category_of(code_);
  }

private:
  ErrorCode code_;
};

} // namespace trisect
