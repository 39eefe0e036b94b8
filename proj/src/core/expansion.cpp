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
#include "core/expansion.hpp"

#include <string>

#include "core/error.hpp"

namespace egypt {

std::string_view kind_name(ExpansionKind kind) {
  switch (kind) {
    case ExpansionKind::kGreedy: return "greedy";
    case ExpansionKind::kOddGreedy: return "odd_greedy";
    case ExpansionKind::kPseudoGreedy: return "pseudo_greedy";
  }
  return "?";
}

ExpansionKind parse_kind(std::string_view text) {
  if (text == "greedy") return ExpansionKind::kGreedy;
  if (text == "odd" || text == "odd_greedy") return ExpansionKind::kOddGreedy;
  if (text == "pseudo" || text == "pseudo_greedy") return ExpansionKind::kPseudoGreedy;
  fail(ErrorCode::kInvalidArgument, "unknown expansion kind '" + std::string(text) + "'");
}

std::string_view status_name(ExpansionStatus status) {
  switch (status) {
    case ExpansionStatus::kExact: return "EXACT";
    case ExpansionStatus::kZeroGap: return "ZERO_GAP";
    case ExpansionStatus::kMaxTerms: return "MAXTERMS";
  }
  return "?";
}

Integer centered_residue(const Integer& d, const Integer& c) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
  if (2 * r >= c) r -= c;
  return r;
}

namespace {

bool fits(const Integer& d, std::size_t digit_cap) {
  return mpz_sizeinbase(d.get_mpz_t(), 10) <= digit_cap || decimal_length(d) <= digit_cap;
}

// Smallest odd integer >= v.
Integer odd_ceil(const Rational& v) {
  Integer n = v.ceil();
  if (mpz_even_p(n.get_mpz_t())) n += 1;
  return n;
}

Expansion expand_rational(const Rational& r, ExpansionKind kind, const ExpandOptions& opt) {
  Expansion out;
  out.kind = kind;
  out.r = r;
  Integer c = r.num();
  Integer d = r.den();
  bool zero_seen = false;

  for (std::size_t n = 1; n <= opt.max_terms; ++n) {
    ExpansionRecord rec;
    rec.n = n;
    rec.x = Rational(c, d);
    rec.c = c;
    if (fits(d, opt.digit_cap)) rec.d = d;

    Integer next_c;
    if (kind == ExpansionKind::kPseudoGreedy) {
      Integer e;
      if (zero_seen && !opt.continue_past_zero) {
        // Once x_n = 1/m the tail is the Sylvester sequence s_k(m): e stays 0.
        rec.implied = true;
        e = 0;
      } else {
        e = centered_residue(d, c);
      }
      Integer q_exact;
      mpz_divexact(q_exact.get_mpz_t(), Integer(d - e).get_mpz_t(), c.get_mpz_t());
      rec.a = q_exact + 1;
      rec.eps = Value(Rational(e, c));
      rec.e = e;
      if (sgn(e) == 0 && !zero_seen) {
        zero_seen = true;
        out.first_zero_gap = n;
      }
      next_c = c - e;
    } else {
      const Rational inv(d, c);
      rec.a = kind == ExpansionKind::kGreedy ? inv.ceil() : odd_ceil(inv);
      next_c = c * rec.a - d;
    }
    d *= rec.a;
    c = std::move(next_c);
    out.records.push_back(std::move(rec));
    if (sgn(c) == 0) {
      out.status = ExpansionStatus::kExact;
      return out;
    }
  }
  out.status = zero_seen ? ExpansionStatus::kZeroGap : ExpansionStatus::kMaxTerms;
  return out;
}

Expansion expand_quadratic(const Value& r, ExpansionKind kind, const ExpandOptions& opt) {
  if (kind == ExpansionKind::kOddGreedy) {
    fail(ErrorCode::kOddGreedyOnIrrational, "odd-greedy expansion needs a rational input");
  }
  Expansion out;
  out.kind = kind;
  out.r = r;
  Value x = r;
  for (std::size_t n = 1; n <= opt.max_terms; ++n) {
    ExpansionRecord rec;
    rec.n = n;
    rec.x = x;
    const Value inv = x.inverse();
    if (kind == ExpansionKind::kPseudoGreedy) {
      const Value shifted = inv + Value(1);
      rec.a = shifted.nearest_int();
      rec.eps = shifted - Value(Rational(rec.a));
    } else {
      rec.a = inv.ceil();
    }
    x = x - Value(Rational(1, rec.a));
    out.records.push_back(std::move(rec));
    if (x.sign() == 0) {
      out.status = ExpansionStatus::kExact;
      return out;
    }
    if (x.sign() < 0) fail(ErrorCode::kInternal, "negative remainder in expansion");
  }
  out.status = ExpansionStatus::kMaxTerms;
  return out;
}

}  // namespace

Expansion expand(const Value& r, ExpansionKind kind, const ExpandOptions& options) {
  if (r.sign() <= 0) fail(ErrorCode::kNonPositiveInput, "expansion input must be positive, got " + r.str());
  if (options.max_terms == 0) fail(ErrorCode::kInvalidArgument, "max_terms must be positive");
  if (r.is_rational()) return expand_rational(r.rational(), kind, options);
  return expand_quadratic(r, kind, options);
}

NaiveGaps gap_sequence_naive(const Integer& p, const Integer& q, std::size_t max_terms,
                             std::size_t digit_cap) {
  if (sgn(p) <= 0 || sgn(q) <= 0) {
    fail(ErrorCode::kNonPositiveInput, "p and q must be positive");
  }
  if (gcd(p, q) != 1) {
    fail(ErrorCode::kNotReduced, to_string(p) + "/" + to_string(q) + " is not in lowest terms");
  }
  NaiveGaps out;
  out.p = p;
  out.q = q;
  Integer c = p;
  Integer d = q;
  for (std::size_t n = 1; n <= max_terms; ++n) {
    if (mpz_sizeinbase(d.get_mpz_t(), 10) > digit_cap) {
      out.truncated = true;
      break;
    }
    NaiveGapRecord rec;
    rec.n = n;
    rec.c = c;
    rec.d = d;
    rec.e = centered_residue(d, c);
    mpz_divexact(rec.a.get_mpz_t(), Integer(d - rec.e).get_mpz_t(), c.get_mpz_t());
    rec.a += 1;
    rec.eps = Rational(rec.e, c);
    c -= rec.e;
    d *= rec.a;
    out.records.push_back(std::move(rec));
  }
  return out;
}

}  // namespace egypt
