#pragma once

#include <stdexcept>
#include <string>

namespace coulomb {

enum class ErrorCode {
  // Input / validation failures.
  InvalidGroup,
  DuplicateNode,
  UnknownNode,
  InvalidEdge,
  MixedFamilyEdge,
  ParseError,
  FlavorNodeHasNoBalance,
  NonIntegralBalance,
  NotAbelianGaugeNode,
  NotAFlavorNode,
  DimensionMismatch,
  MultiplyAttachedFlavor,
  PartitionSumMismatch,
  UnsupportedFamily,
  ChamberViolation,
  FugacityMismatch,
  UnknownFugacity,
  OrderExceeded,
  NonUnitConstantTerm,
  NonzeroConstantTerm,
  NonIntegralResult,
  RankDeficient,
  InvalidArgument,
  // Failures of the computation itself.
  DecoupledU1Unresolved,
  BadTheory,
  ConvergenceNotReached,
  HalfOddGrading,
};

const char* to_string(ErrorCode code) noexcept;

/// True for errors raised while evaluating a (syntactically valid) theory.
bool is_computational(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  /// The text without the error-code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace coulomb
