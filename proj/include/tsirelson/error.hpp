// Copyright 2026 The tsirelson-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tsirelson {

enum class ErrorCode {
  kMalformedRational,
  kMalformedIndex,
  kZeroCoefficient,
  kMalformedOrdinal,
  kMalformedMap,
  kInvalidArgument,
  kThetaOutOfRange,
  kOverflow,
  kBoundExceeded,
  kSupportTooLarge,
  kZeroVector,
  kNotOnSphere,
  kNotMember,
  kIntegerTheta,
  kNonInjective,
  kFormValidation,
  kResourceLimit,
  kVerificationFailure,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedRational: return "MalformedRational";
    case ErrorCode::kMalformedIndex: return "MalformedIndex";
    case ErrorCode::kZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::kMalformedOrdinal: return "MalformedOrdinal";
    case ErrorCode::kMalformedMap: return "MalformedMap";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kThetaOutOfRange: return "ThetaOutOfRange";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kBoundExceeded: return "BoundExceeded";
    case ErrorCode::kSupportTooLarge: return "SupportTooLarge";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kNotOnSphere: return "NotOnSphere";
    case ErrorCode::kNotMember: return "NotMember";
    case ErrorCode::kIntegerTheta: return "IntegerTheta";
    case ErrorCode::kNonInjective: return "NonInjective";
    case ErrorCode::kFormValidation: return "FormValidation";
    case ErrorCode::kResourceLimit: return "ResourceLimit";
    case ErrorCode::kVerificationFailure: return "VerificationFailure";
  }
  return "Unknown";
}

// Every failure raised by the library. Input errors and engine self-check
// failures are distinguished by code(); kVerificationFailure means the exact
// engine disagreed with a closed-form value it was asked to confirm.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  bool is_input_error() const noexcept {
    return code_ != ErrorCode::kVerificationFailure &&
           code_ != ErrorCode::kOverflow &&
           code_ != ErrorCode::kResourceLimit;
  }

 private:
  ErrorCode code_;
};

}  // namespace tsirelson
