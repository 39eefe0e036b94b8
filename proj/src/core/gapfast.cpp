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
#include "core/gapfast.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "core/expansion.hpp"

namespace egypt {

namespace {

// e_n for the current n, given c_1..c_n and e_1..e_{n-1}.
Integer next_gap(const Integer& q, const std::vector<Integer>& c, const std::vector<Integer>& e,
                 std::vector<Integer>& suffix) {
  const std::size_t n = c.size();
  // suffix[k] = c_k * ... * c_n, 0-based.
  suffix.resize(n + 1);
  suffix[n] = 1;
  for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] * c[k];

  Integer d;  // d_k mod suffix[k]
  mpz_fdiv_r(d.get_mpz_t(), q.get_mpz_t(), suffix[0].get_mpz_t());
  Integer t;
  Integer a;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Integer& mod_k = suffix[k];
    const Integer& mod_next = suffix[k + 1];
    t = d - e[k];
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), mod_k.get_mpz_t());
    if (mpz_divisible_p(t.get_mpz_t(), c[k].get_mpz_t()) == 0) {
      fail(ErrorCode::kInternal, "residue chain broken: c_" + std::to_string(k + 1) +
                                     " does not divide d_k - e_k");
    }
    mpz_divexact(a.get_mpz_t(), t.get_mpz_t(), c[k].get_mpz_t());
    a += 1;  // a_k mod suffix[k + 1]
    mpz_fdiv_r(d.get_mpz_t(), d.get_mpz_t(), mod_next.get_mpz_t());
    d *= a;
    mpz_fdiv_r(d.get_mpz_t(), d.get_mpz_t(), mod_next.get_mpz_t());
  }
  return centered_residue(d, c[n - 1]);
}

}  // namespace

GapTrace gap_sequence_fast(const Integer& p, const Integer& q, std::size_t n_max,
                           const FastOptions& options) {
  if (sgn(p) <= 0 || sgn(q) <= 0) fail(ErrorCode::kNonPositiveInput, "p and q must be positive");
  if (gcd(p, q) != 1) {
    fail(ErrorCode::kNotReduced, to_string(p) + "/" + to_string(q) + " is not in lowest terms");
  }
  GapTrace trace;
  trace.p = p;
  trace.q = q;
  trace.c.push_back(p);
  std::vector<Integer> suffix;
  for (std::size_t n = 1; n <= n_max; ++n) {
    Integer e = next_gap(q, trace.c, trace.e, suffix);
    trace.eps.emplace_back(e, trace.c.back());
    trace.c.push_back(trace.c.back() - e);
    const bool zero = sgn(e) == 0;
    trace.e.push_back(std::move(e));
    trace.steps = n;
    if (zero && !trace.n0) {
      trace.n0 = n;
      trace.terminated = true;
      if (options.stop_at_zero) break;
    }
  }
  return trace;
}

std::vector<GapMismatch> compare_traces(const GapTrace& fast, const NaiveGaps& naive,
                                        std::size_t prefix_cap) {
  std::vector<GapMismatch> out;
  std::size_t len = std::min(fast.steps, prefix_cap);
  if (naive.records.size() < len) {
    if (!naive.truncated) {
      out.push_back({fast.p, fast.q, 0, "naive stream shorter than the compared prefix"});
    }
    len = naive.records.size();
  }
  for (std::size_t i = 0; i < len; ++i) {
    const NaiveGapRecord& rec = naive.records[i];
    if (rec.c != fast.c[i] || rec.e != fast.e[i]) {
      out.push_back({fast.p, fast.q, i + 1,
                     "fast (c,e)=(" + to_string(fast.c[i]) + "," + to_string(fast.e[i]) +
                         ") naive (c,e)=(" + to_string(rec.c) + "," + to_string(rec.e) + ")"});
    }
  }
  return out;
}

VerifyReport verify_fast_vs_naive(unsigned long q_max, std::size_t prefix_cap) {
  VerifyReport report;
  for (unsigned long qv = 1; qv <= q_max; ++qv) {
    for (unsigned long pv = 1; pv <= qv; ++pv) {
      const Integer p(pv);
      const Integer q(qv);
      if (gcd(p, q) != 1) continue;
      const GapTrace fast = gap_sequence_fast(p, q, prefix_cap);
      const std::size_t len = std::min(fast.steps, prefix_cap);
      const NaiveGaps naive = gap_sequence_naive(p, q, len);
      auto mism = compare_traces(fast, naive, prefix_cap);
      report.mismatches.insert(report.mismatches.end(), mism.begin(), mism.end());
      report.terms_compared += std::min(len, naive.records.size());
      ++report.pairs_checked;
    }
  }
  return report;
}

}  // namespace egypt
