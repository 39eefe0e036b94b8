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
#ifndef EGYPT_CORE_GAPFAST_HPP
#define EGYPT_CORE_GAPFAST_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "core/exactnum.hpp"

namespace egypt {

struct NaiveGaps;

/// Gap sequence of the pseudo-greedy expansion of p/q in the unreduced
/// bookkeeping eps_k = e_k / c_k, c_{k+1} = c_k - e_k.
struct GapTrace {
  Integer p;
  Integer q;
  std::vector<Integer> c;  // c_1 .. c_{steps+1}
  std::vector<Integer> e;  // e_1 .. e_steps
  std::vector<Rational> eps;
  bool terminated = false;
  std::optional<std::size_t> n0;  // first index with e = 0 (1-based)
  std::size_t steps = 0;
};

struct FastOptions {
  // Stop at the first zero gap; turn off to keep computing residues past it.
  bool stop_at_zero = true;
};

/// Computes the gap sequence with residues instead of the doubly exponential
/// d_n. For each n, d_1 = q is replayed through k = 1..n-1 keeping d_k modulo
/// M_k = c_k c_{k+1} ... c_n. Knowing d_k mod c_k * M_{k+1} is what makes the
/// exact division (d_k - e_k) / c_k meaningful modulo M_{k+1}: the quotient,
/// hence a_k and d_{k+1} = d_k a_k, is then known modulo M_{k+1}, which is the
/// modulus the next step needs. The final step yields d_n mod c_n, and e_n is
/// its centered representative in [-c_n/2, c_n/2).
///
/// Throws NotReduced unless gcd(p, q) = 1. Running out of n_max is not an
/// error: the trace comes back with terminated = false.
GapTrace gap_sequence_fast(const Integer& p, const Integer& q, std::size_t n_max,
                           const FastOptions& options = {});

struct GapMismatch {
  Integer p;
  Integer q;
  std::size_t index = 0;  // 1-based term index, 0 for a length disagreement
  std::string detail;
};

struct VerifyReport {
  std::size_t pairs_checked = 0;
  std::size_t terms_compared = 0;
  std::vector<GapMismatch> mismatches;
};

/// Compares fast and naive (c, e) prefixes of length min(n0, prefix_cap) for
/// every reduced p/q with 1 <= p <= q <= q_max.
VerifyReport verify_fast_vs_naive(unsigned long q_max, std::size_t prefix_cap);

// Compares a fast trace against a naive stream on their common prefix.
std::vector<GapMismatch> compare_traces(const GapTrace& fast, const NaiveGaps& naive,
                                        std::size_t prefix_cap);

}  // namespace egypt

#endif  // EGYPT_CORE_GAPFAST_HPP
