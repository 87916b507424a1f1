// Copyright 2026 The dpcentrality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dpc {

enum class ErrorCode {
  kMalformedLine,
  kNonPositiveWeight,
  kSelfLoop,
  kDuplicateEdge,
  kInvalidParams,
  kConnectivityFailure,
  kEmptyGraph,
  kNotConnected,
  kSizeLimitExceeded,
  kNoConvergence,
  kTooSmall,
  kZeroEnergy,
  kNonFiniteScore,
  kWeightTooSmall,
  kUnboundedSensitivity,
  kMismatchedLength,
  kIo,
};

constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kNonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kConnectivityFailure: return "ConnectivityFailure";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kZeroEnergy: return "ZeroEnergy";
    case ErrorCode::kNonFiniteScore: return "NonFiniteScore";
    case ErrorCode::kWeightTooSmall: return "WeightTooSmall";
    case ErrorCode::kUnboundedSensitivity: return "UnboundedSensitivity";
    case ErrorCode::kMismatchedLength: return "MismatchedLength";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

// Input errors (bad files, bad parameters) versus failures of a computation
// on otherwise valid input. The CLI maps these to exit codes 1 and 2.
constexpr bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLine:
    case ErrorCode::kNonPositiveWeight:
    case ErrorCode::kSelfLoop:
    case ErrorCode::kDuplicateEdge:
    case ErrorCode::kInvalidParams:
    case ErrorCode::kIo:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0)
      : std::runtime_error(format(code, message, line)),
        code_(code),
        line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  // 1-based line number for parse errors, 0 otherwise.
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(ErrorCode code, const std::string& message,
                            std::size_t line) {
    std::string out(error_code_name(code));
    if (line != 0) out += " (line " + std::to_string(line) + ")";
    if (!message.empty()) out += ": " + message;
    return out;
  }

  ErrorCode code_;
  std::size_t line_;
};

}  // namespace dpc
