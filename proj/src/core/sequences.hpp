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
#ifndef EGYPT_CORE_SEQUENCES_HPP
#define EGYPT_CORE_SEQUENCES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "core/exactnum.hpp"

namespace egypt {

inline constexpr std::size_t kSylvesterDepthCap = 24;
inline constexpr std::size_t kFibPow2Cap = 24;
inline constexpr unsigned long kFibIndexCap = 1UL << 24;

/// s_1(m) = m + 1, s_{n+1}(m) = s_n(m)^2 - s_n(m) + 1. The reciprocals sum to 1/m.
Integer sylvester(const Integer& m, std::size_t n, std::size_t depth_cap = kSylvesterDepthCap);
// s_1(m) .. s_n(m)
std::vector<Integer> sylvester_terms(const Integer& m, std::size_t n,
                                     std::size_t depth_cap = kSylvesterDepthCap);

/// Fibonacci number by fast doubling.
Integer fib(unsigned long n);
/// F_{2^n}.
Integer fib_pow2(std::size_t n);
// F_{2^1} .. F_{2^n}
std::vector<Integer> fib_pow2_terms(std::size_t n);

struct GrowthEstimate {
  Integer m;
  std::size_t depth = 0;
  long double c_hat = 0;
  std::string c_hat_str;
  // Analytic bound on |c(m) - c_hat| from truncating the recurrence at depth.
  std::string residual_bound;
  // Floating-point error of c_hat itself (long double log/exp).
  std::string precision_bound;
};

/// c(m) ~ s_depth(m)^(2^-depth), with s_n(m) ~ c(m)^(2^n). Requires 4 <= depth <= 16.
GrowthEstimate growth_constant(const Integer& m, std::size_t depth);

/// Natural log of a positive integer from its bit length and leading 64 bits.
long double log_integer(const Integer& n);

}  // namespace egypt

#endif  // EGYPT_CORE_SEQUENCES_HPP
