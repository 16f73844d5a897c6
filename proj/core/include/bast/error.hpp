#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bast {

enum class ErrorCode {
  kInvalidArgument,
  kDuplicatePoint,
  kApexMismatch,
  kGadgetSearchFailed,
  kTooFewPoints,
  kTooManyPoints,
  kTheoremViolation,
  kSeparationConnectivityViolation,
  kDisconnectedUDG,
  kClaimViolation,
  kPartitionInvalid,
  kHopBoundViolation,
  kNotBipartiteLayout,
  kDegreeTooHigh,
  kReductionUndefined,
  kParseError,
  kUnknownGenerator,
  kInvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The code identifies the failure
/// class; the message carries instance detail (indices, positions).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bast
