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

#include <random>
#include <vector>

#include <doctest.h>

#include "core/error.hpp"
#include "core/expansion.hpp"
#include "core/recovery.hpp"
#include "core/sequences.hpp"

using namespace egypt;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an egypt::Error");
  return ErrorCode::kInternal;
}

Rational rat(long p, long q) { return Rational(Integer(p), Integer(q)); }

const Value kMillin = parse_value("(5-1 sqrt 5)/2");

}  // namespace

TEST_CASE("threshold values") {
  CHECK(threshold(Rational(1)) == rat(128, 9));
  CHECK(threshold(rat(1, 3)) == rat(32, 9));
  CHECK(threshold(Rational(0)) == rat(8, 9));
  CHECK(threshold(Rational(1)).ceil() == 15);
  CHECK(code_of([] { threshold(rat(-1, 5)); }) == ErrorCode::kNegativeBeta);
  const Value t = threshold(parse_value("(0+1 sqrt 5)/5"));
  CHECK(t == parse_value("(112+48 sqrt 5)/45"));
}

TEST_CASE("recovery examples") {
  const auto s = recover_sequence(Value(1), Value(1), 6);
  const std::vector<long> syl = {2, 3, 7, 43, 1807, 3263443};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(s[i].a == syl[i]);
    CHECK(s[i].delta == Value(0));
  }
  CHECK_FALSE(s[0].threshold_met);
  CHECK(s[3].threshold_met);

  const auto third = recover_sequence(Value(rat(1, 3)), Value(1), 3);
  CHECK(third[0].a == 4);
  CHECK(third[1].a == 13);
  CHECK(third[2].a == 157);

  CHECK(code_of([] { recover_sequence(Value(rat(1, 2)), Value(0), 3); }) == ErrorCode::kRecoveryBreakdown);
  CHECK(code_of([] { recover_sequence(Value(0), Value(1), 3); }) == ErrorCode::kNonPositiveInput);
  CHECK(code_of([] { recover_sequence(Value(1), Value(rat(-1, 2)), 3); }) == ErrorCode::kNegativeBeta);
}

TEST_CASE("Fibonacci powers of two come back from their sum") {
  const auto rec = recover_sequence(kMillin, Value(rat(1, 3)), 8);
  REQUIRE(rec.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(rec[i].a == fib_pow2(i + 1));
    if (rec[i].threshold_met) {
      CHECK((rec[i].delta - Value(rat(1, 2))).sign() < 0);
      CHECK((rec[i].delta + Value(rat(1, 2))).sign() >= 0);
    }
  }
  const Value head = Value(1) + Value(rat(1, 3)) + Value(rat(1, 21));
  CHECK((head - parse_value("(1583-319 sqrt 5)/638")).sign() >= 0);
  CHECK((head - kMillin).sign() < 0);
}

TEST_CASE("characterization with an irrational shift") {
  std::vector<Integer> f;
  for (std::size_t n = 1; n <= 8; ++n) f.push_back(fib_pow2(n));
  const auto entries = verify_characterization(f, kMillin, parse_value("(0+1 sqrt 5)/5"));
  REQUIRE(entries.size() == 8);
  const Value tol(rat(1, 100));
  for (const auto& e : entries) {
    CHECK(e.reproduces);
    if (e.n >= 3) {
      CHECK((tol - e.delta).sign() > 0);
      CHECK((tol + e.delta).sign() > 0);
    }
  }
  // delta_n shrinks quickly: below 1e-50 by n = 8
  const Value tiny(Rational(Integer(1), Integer("1" + std::string(50, '0'))));
  CHECK((tiny - entries[7].delta).sign() > 0);

  const auto at_third = verify_characterization(f, kMillin, Value(rat(1, 3)));
  for (const auto& e : at_third) CHECK(e.reproduces);
}

TEST_CASE("characterization errors") {
  const std::vector<Integer> too_big = {Integer(1), Integer(1)};
  CHECK(code_of([&] { verify_characterization(too_big, Value(1), Value(1)); }) == ErrorCode::kSumExceeds);
  const std::vector<Integer> bad = {Integer(0)};
  CHECK(code_of([&] { verify_characterization(bad, Value(1), Value(1)); }) == ErrorCode::kNonPositiveInput);
  const std::vector<Integer> syl = {Integer(2), Integer(3), Integer(7)};
  CHECK(code_of([&] { verify_characterization(syl, Value(1), Value(rat(-1, 3))); }) ==
        ErrorCode::kNegativeBeta);
}

TEST_CASE("shift 1 recovery equals the pseudo-greedy expansion") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> qd(1, 500);
  for (int i = 0; i < 200; ++i) {
    const long q = qd(rng);
    std::uniform_int_distribution<long> pd(1, 2 * q);
    const Value r(rat(pd(rng), q));
    ExpandOptions opt;
    opt.max_terms = 6;
    const Expansion e = expand(r, ExpansionKind::kPseudoGreedy, opt);
    const auto rec = recover_sequence(r, Value(1), 6);
    REQUIRE(rec.size() == e.records.size());
    for (std::size_t k = 0; k < rec.size(); ++k) {
      REQUIRE(rec[k].a == e.records[k].a);
      REQUIRE(rec[k].delta == *e.records[k].eps);
    }
  }
}

TEST_CASE("Sylvester sequences are fixed points at shift 1") {
  for (long m = 1; m <= 30; ++m) {
    const auto s = sylvester_terms(Integer(m), 8);
    const auto rec = recover_sequence(Value(rat(1, m)), Value(1), 8);
    for (std::size_t k = 0; k < 8; ++k) REQUIRE(rec[k].a == s[k]);
    const auto ch = verify_characterization(s, Value(rat(1, m)), Value(1));
    for (const auto& e : ch) {
      REQUIRE(e.reproduces);
      REQUIRE(e.delta == Value(0));
    }
  }
}
