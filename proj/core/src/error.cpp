#include "coulomb/error.hpp"

namespace coulomb {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::MixedFamilyEdge: return "MixedFamilyEdge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FlavorNodeHasNoBalance: return "FlavorNodeHasNoBalance";
    case ErrorCode::NonIntegralBalance: return "NonIntegralBalance";
    case ErrorCode::NotAbelianGaugeNode: return "NotAbelianGaugeNode";
    case ErrorCode::NotAFlavorNode: return "NotAFlavorNode";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::MultiplyAttachedFlavor: return "MultiplyAttachedFlavor";
    case ErrorCode::PartitionSumMismatch: return "PartitionSumMismatch";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::ChamberViolation: return "ChamberViolation";
    case ErrorCode::FugacityMismatch: return "FugacityMismatch";
    case ErrorCode::UnknownFugacity: return "UnknownFugacity";
    case ErrorCode::OrderExceeded: return "OrderExceeded";
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::NonIntegralResult: return "NonIntegralResult";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DecoupledU1Unresolved: return "DecoupledU1Unresolved";
    case ErrorCode::BadTheory: return "BadTheory";
    case ErrorCode::ConvergenceNotReached: return "ConvergenceNotReached";
    case ErrorCode::HalfOddGrading: return "HalfOddGrading";
  }
  return "Unknown";
}

bool is_computational(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DecoupledU1Unresolved:
    case ErrorCode::BadTheory:
    case ErrorCode::ConvergenceNotReached:
    case ErrorCode::HalfOddGrading:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

}  // namespace coulomb
