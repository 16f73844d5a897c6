#include "bast/error.hpp"

namespace bast {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDuplicatePoint: return "DuplicatePoint";
    case ErrorCode::kApexMismatch: return "ApexMismatch";
    case ErrorCode::kGadgetSearchFailed: return "GadgetSearchFailed";
    case ErrorCode::kTooFewPoints: return "TooFewPoints";
    case ErrorCode::kTooManyPoints: return "TooManyPoints";
    case ErrorCode::kTheoremViolation: return "TheoremViolation";
    case ErrorCode::kSeparationConnectivityViolation: return "SeparationConnectivityViolation";
    case ErrorCode::kDisconnectedUDG: return "DisconnectedUDG";
    case ErrorCode::kClaimViolation: return "ClaimViolation";
    case ErrorCode::kPartitionInvalid: return "PartitionInvalid";
    case ErrorCode::kHopBoundViolation: return "HopBoundViolation";
    case ErrorCode::kNotBipartiteLayout: return "NotBipartiteLayout";
    case ErrorCode::kDegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::kReductionUndefined: return "ReductionUndefined";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownGenerator: return "UnknownGenerator";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace bast
