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
#include "core/recovery.hpp"

#include <string>

#include "core/error.hpp"

namespace egypt {

namespace {

void require_nonnegative(const Value& beta) {
  if (beta.sign() < 0) fail(ErrorCode::kNegativeBeta, "beta must be >= 0, got " + beta.str());
}

bool at_least(const Integer& a, const Value& bound) {
  return (Value(Rational(a)) - bound).sign() >= 0;
}

}  // namespace

Rational threshold(const Rational& beta) {
  if (beta.sign() < 0) fail(ErrorCode::kNegativeBeta, "beta must be >= 0, got " + beta.str());
  const Rational shifted = beta + Rational(1, 3);
  return Rational(8) * shifted * shifted;
}

Value threshold(const Value& beta) {
  require_nonnegative(beta);
  if (beta.is_rational()) return threshold(beta.rational());
  const Value shifted = beta + Value(Rational(1, 3));
  return Value(8) * shifted * shifted;
}

std::vector<RecoveryRecord> recover_sequence(const Value& r, const Value& beta,
                                             std::size_t n_terms) {
  if (r.sign() <= 0) fail(ErrorCode::kNonPositiveInput, "sum must be positive, got " + r.str());
  const Value bound = threshold(beta);
  std::vector<RecoveryRecord> out;
  out.reserve(n_terms);
  Value x = r;
  for (std::size_t n = 1; n <= n_terms; ++n) {
    RecoveryRecord rec;
    rec.n = n;
    rec.x = x;
    const Value target = x.inverse() + beta;
    rec.a = target.nearest_int();
    if (sgn(rec.a) < 1) {
      fail(ErrorCode::kRecoveryBreakdown,
           "a_" + std::to_string(n) + " = " + to_string(rec.a) + " is not positive");
    }
    rec.delta = target - Value(Rational(rec.a));
    rec.threshold_met = at_least(rec.a, bound);
    x = x - Value(Rational(1, rec.a));
    out.push_back(std::move(rec));
    if (x.sign() <= 0) {
      fail(ErrorCode::kRecoveryBreakdown,
           "remainder after a_" + std::to_string(n) + " is not positive");
    }
  }
  return out;
}

std::vector<CharacterizationEntry> verify_characterization(std::span<const Integer> a,
                                                           const Value& r, const Value& beta) {
  const Value bound = threshold(beta);
  Value x = r;
  std::vector<CharacterizationEntry> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) <= 0) fail(ErrorCode::kNonPositiveInput, "terms must be positive");
    if (x.sign() <= 0) {
      fail(ErrorCode::kSumExceeds,
           "reciprocals of the first " + std::to_string(i) + " terms already reach the sum");
    }
    CharacterizationEntry entry;
    entry.n = i + 1;
    entry.a = a[i];
    entry.x = x;
    const Value target = x.inverse() + beta;
    entry.formula = target.nearest_int();
    entry.reproduces = entry.formula == a[i];
    entry.threshold_met = at_least(a[i], bound);
    entry.delta = target - Value(Rational(a[i]));
    x = x - Value(Rational(1, a[i]));
    out.push_back(std::move(entry));
  }
  if (x.sign() <= 0) fail(ErrorCode::kSumExceeds, "reciprocal sum of the prefix reaches the sum");
  return out;
}

}  // namespace egypt
