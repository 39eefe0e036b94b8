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
#ifndef EGYPT_CORE_RECOVERY_HPP
#define EGYPT_CORE_RECOVERY_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "core/exactnum.hpp"

namespace egypt {

/// 8 (beta + 1/3)^2, the size above which the offset-beta rounding formula
/// is guaranteed to return a_n. Throws NegativeBeta for beta < 0.
Value threshold(const Value& beta);
Rational threshold(const Rational& beta);

struct RecoveryRecord {
  std::size_t n = 0;
  Integer a;
  Value x;      // remainder before the step
  Value delta;  // x^-1 + beta - a
  bool threshold_met = false;
};

/// a_n = nearest_int(x_n^-1 + beta), x_{n+1} = x_n - 1/a_n, exactly.
/// Throws RecoveryBreakdown when a_n < 1 or x_{n+1} <= 0.
std::vector<RecoveryRecord> recover_sequence(const Value& r, const Value& beta,
                                             std::size_t n_terms);

struct CharacterizationEntry {
  std::size_t n = 0;
  Integer a;        // the supplied term
  Integer formula;  // nearest_int(x_n^-1 + beta)
  bool reproduces = false;
  bool threshold_met = false;
  Value x;
  Value delta;  // x_n^-1 + beta - a_n
};

/// Checks a given prefix against the rounding formula with r as its reciprocal
/// sum. Throws SumExceeds if the prefix's reciprocals already reach r.
std::vector<CharacterizationEntry> verify_characterization(std::span<const Integer> a,
                                                           const Value& r, const Value& beta);

}  // namespace egypt

#endif  // EGYPT_CORE_RECOVERY_HPP
