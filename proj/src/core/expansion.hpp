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
#ifndef EGYPT_CORE_EXPANSION_HPP
#define EGYPT_CORE_EXPANSION_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "core/exactnum.hpp"

namespace egypt {

enum class ExpansionKind { kGreedy, kOddGreedy, kPseudoGreedy };

std::string_view kind_name(ExpansionKind kind);
// Accepts "greedy", "odd", "odd_greedy", "pseudo", "pseudo_greedy".
ExpansionKind parse_kind(std::string_view text);

/// One step of an expansion. For rational input the remainder is tracked as
/// the unreduced pair x_n = c_n / d_n with d_n = q * a_1 * ... * a_{n-1};
/// 'x' holds the reduced form.
struct ExpansionRecord {
  std::size_t n = 0;
  Integer a;
  Value x;
  std::optional<Value> eps;  // pseudo-greedy only: x^-1 + 1 - a
  std::optional<Integer> c;
  std::optional<Integer> d;  // dropped once longer than digit_cap digits
  std::optional<Integer> e;  // pseudo-greedy only: eps = e / c
  // Emitted from the zero-gap tail (e = 0 from here on) instead of a residue.
  bool implied = false;
};

enum class ExpansionStatus {
  kExact,     // remainder reached zero
  kZeroGap,   // pseudo-greedy on a rational reached eps = 0
  kMaxTerms,  // stopped by max_terms; for odd-greedy this is NONTERMINATED
};

std::string_view status_name(ExpansionStatus status);

struct Expansion {
  ExpansionKind kind = ExpansionKind::kPseudoGreedy;
  Value r;
  std::vector<ExpansionRecord> records;
  ExpansionStatus status = ExpansionStatus::kMaxTerms;
  std::optional<std::size_t> first_zero_gap;
};

inline constexpr std::size_t kDefaultDigitCap = 10000;

struct ExpandOptions {
  std::size_t max_terms = 10;
  std::size_t digit_cap = kDefaultDigitCap;
  // Keep computing residues after the first zero gap instead of emitting the
  // implied Sylvester tail.
  bool continue_past_zero = false;
};

Expansion expand(const Value& r, ExpansionKind kind, const ExpandOptions& options);

struct NaiveGapRecord {
  std::size_t n = 0;
  Integer c;
  Integer d;
  Integer e;
  Integer a;
  Rational eps;
};

struct NaiveGaps {
  Integer p;
  Integer q;
  std::vector<NaiveGapRecord> records;
  // True when d_n outgrew the digit cap before max_terms were produced.
  bool truncated = false;
  std::size_t trusted_terms() const { return records.size(); }
};

inline constexpr std::size_t kNaiveDigitCap = 100000;

/// The (c_n, e_n, eps_n) stream for p/q from full exact arithmetic. Does not
/// stop at a zero gap. Throws NotReduced unless gcd(p, q) = 1.
NaiveGaps gap_sequence_naive(const Integer& p, const Integer& q, std::size_t max_terms,
                             std::size_t digit_cap = kNaiveDigitCap);

// e = d mod c, centered into [-c/2, c/2).
Integer centered_residue(const Integer& d, const Integer& c);

}  // namespace egypt

#endif  // EGYPT_CORE_EXPANSION_HPP
