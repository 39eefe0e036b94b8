// Copyright 2026 The egypt Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/error.hpp"

namespace egypt {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kNonPositiveInput: return "NonPositiveInput";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kRadicandMismatch: return "RadicandMismatch";
    case ErrorCode::kInvalidRadicand: return "InvalidRadicand";
    case ErrorCode::kDepthExceeded: return "DepthExceeded";
    case ErrorCode::kNotReduced: return "NotReduced";
    case ErrorCode::kOddGreedyOnIrrational: return "OddGreedyOnIrrational";
    case ErrorCode::kNegativeBeta: return "NegativeBeta";
    case ErrorCode::kRecoveryBreakdown: return "RecoveryBreakdown";
    case ErrorCode::kSumExceeds: return "SumExceeds";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kCorruptCheckpoint: return "CorruptCheckpoint";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "UnknownError";
}

void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(error_name(code)) + ": " + what);
}

}  // namespace egypt
