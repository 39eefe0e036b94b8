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

#ifndef EGYPT_CORE_ERROR_HPP
#define EGYPT_CORE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace egypt {

// Numbering is part of the C ABI (see egypt.h); append only.
enum class ErrorCode : int {
  kParse = 1,
  kNonPositiveInput = 2,
  kDivisionByZero = 3,
  kRadicandMismatch = 4,
  kInvalidRadicand = 5,
  kDepthExceeded = 6,
  kNotReduced = 7,
  kOddGreedyOnIrrational = 8,
  kNegativeBeta = 9,
  kRecoveryBreakdown = 10,
  kSumExceeds = 11,
  kIo = 12,
  kCorruptCheckpoint = 13,
  kInvalidArgument = 14,
  kInternal = 15,
};

// Stable, user-visible name ("NonPositiveInput", ...).
std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace egypt

#endif  // EGYPT_CORE_ERROR_HPP
