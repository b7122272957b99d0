/**
 * @file error.hpp
 * @brief Error codes and the exception type thrown by every mcdm routine.
 */

#ifndef MCDM_ERROR_HPP
#define MCDM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcdm {

enum class ErrorCode {
  // decision problem ingestion
  NonPositiveValue,
  NonFiniteValue,
  WeightSumError,
  DuplicateLabel,
  EmptyMatrix,
  DimensionMismatch,
  // pairwise comparisons
  MissingComparison,
  DuplicateComparison,
  ScaleViolation,
  InvalidPairwise,
  OrderOutOfRange,
  InconsistentJudgments,
  // numerics
  NoConvergence,
  InvalidSupermatrix,
  // method arguments
  LambdaOutOfRange,
  SchemeMismatch,
  MissingProblem,
  // networks
  InvalidNetwork,
  ZeroGoalColumn,
  // front end
  ParseError,
  UnknownMethod,
  MissingSection,
  InvalidArgument,
};

/// Coarse grouping used by the command-line tool to pick an exit code.
enum class ErrorCategory { Usage, Parse, Validation, Convergence, Consistency };

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveValue: return "NonPositiveValue";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::WeightSumError: return "WeightSumError";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::EmptyMatrix: return "EmptyMatrix";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::MissingComparison: return "MissingComparison";
    case ErrorCode::DuplicateComparison: return "DuplicateComparison";
    case ErrorCode::ScaleViolation: return "ScaleViolation";
    case ErrorCode::InvalidPairwise: return "InvalidPairwise";
    case ErrorCode::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorCode::InconsistentJudgments: return "InconsistentJudgments";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidSupermatrix: return "InvalidSupermatrix";
    case ErrorCode::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::SchemeMismatch: return "SchemeMismatch";
    case ErrorCode::MissingProblem: return "MissingProblem";
    case ErrorCode::InvalidNetwork: return "InvalidNetwork";
    case ErrorCode::ZeroGoalColumn: return "ZeroGoalColumn";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownMethod: return "UnknownMethod";
    case ErrorCode::MissingSection: return "MissingSection";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

constexpr ErrorCategory category_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return ErrorCategory::Parse;
    case ErrorCode::NoConvergence:
      return ErrorCategory::Convergence;
    case ErrorCode::InconsistentJudgments:
      return ErrorCategory::Consistency;
    case ErrorCode::UnknownMethod:
    case ErrorCode::MissingSection:
    case ErrorCode::InvalidArgument:
    case ErrorCode::MissingProblem:
    case ErrorCode::SchemeMismatch:
      return ErrorCategory::Usage;
    default:
      return ErrorCategory::Validation;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  [[nodiscard]] ErrorCategory category() const noexcept { return category_of(code_); }

 private:
  ErrorCode code_;
};

}  // namespace mcdm

#endif  // MCDM_ERROR_HPP
