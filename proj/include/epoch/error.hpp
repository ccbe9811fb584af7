// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace epoch {

// Every failure the library can raise. One enumerator per distinct contract
// violation so tests can match on the code instead of parsing messages.
enum class ErrorCode {
  // bitcodec
  kFieldOutOfRange,
  kReservedBitsSet,
  kUnknownBlockType,
  kBadFrameLength,
  kTruncatedPayload,
  kOrphanType2,
  kPayloadCountMismatch,
  kUnknownPacketWord,
  kCountOverflow,
  kSyncNotFound,
  kLengthNotWordMultiple,
  kMalformedLine,
  // fabricsim
  kBadConfigFile,
  kCellOutsideGeometry,
  kDuplicateCell,
  kIdcodeMismatch,
  kNotSynced,
  kCrcMismatch,
  kMissingPaddingFrame,
  kWriteWhileNotWcfg,
  kReadbackNotArmed,
  kCountMismatch,
  kFarOutOfRange,
  // tenants
  kSlotOverlap,
  kUnknownSlot,
  // epochctl
  kRegionOverflow,
  kGeometryMismatch,
  kNotABramFrame,
  // cli
  kGoldenMismatch,
  kScriptParse,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace epoch
