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
#include "core/sequences.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>

#include "core/error.hpp"

namespace egypt {

namespace {

void require_positive(const Integer& m) {
  if (sgn(m) <= 0) fail(ErrorCode::kNonPositiveInput, "m must be positive, got " + to_string(m));
}

// Scientific notation from a base-10 logarithm, e.g. -27.3 -> "5.01e-28".
std::string format_log10(long double lg) {
  long double expo = std::floor(lg);
  long double mant = std::pow(10.0L, lg - expo);
  if (mant >= 9.995L) {
    mant /= 10;
    expo += 1;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2Lfe%+lld", mant, static_cast<long long>(expo));
  return buf;
}

}  // namespace

std::vector<Integer> sylvester_terms(const Integer& m, std::size_t n, std::size_t depth_cap) {
  require_positive(m);
  if (n > depth_cap) {
    fail(ErrorCode::kDepthExceeded,
         "Sylvester depth " + std::to_string(n) + " exceeds cap " + std::to_string(depth_cap));
  }
  std::vector<Integer> out;
  out.reserve(n);
  Integer s = m + 1;
  for (std::size_t k = 1; k <= n; ++k) {
    out.push_back(s);
    if (k < n) s = s * s - s + 1;
  }
  return out;
}

Integer sylvester(const Integer& m, std::size_t n, std::size_t depth_cap) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "Sylvester index starts at 1");
  return sylvester_terms(m, n, depth_cap).back();
}

Integer fib(unsigned long n) {
  if (n > kFibIndexCap) {
    fail(ErrorCode::kDepthExceeded, "Fibonacci index " + std::to_string(n) + " exceeds 2^24");
  }
  // (f, g) = (F_k, F_{k+1}) while consuming the bits of n from the top.
  Integer f = 0;
  Integer g = 1;
  for (int bit = 63; bit >= 0; --bit) {
    Integer f2 = f * (2 * g - f);
    Integer g2 = f * f + g * g;
    if ((n >> bit) & 1UL) {
      f = g2;
      g = f2 + g2;
    } else {
      f = std::move(f2);
      g = std::move(g2);
    }
  }
  return f;
}

Integer fib_pow2(std::size_t n) {
  if (n > kFibPow2Cap) {
    fail(ErrorCode::kDepthExceeded, "fib_pow2 index " + std::to_string(n) + " exceeds 24");
  }
  return fib(1UL << n);
}

std::vector<Integer> fib_pow2_terms(std::size_t n) {
  std::vector<Integer> out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) out.push_back(fib_pow2(k));
  return out;
}

long double log_integer(const Integer& n) {
  if (sgn(n) <= 0) fail(ErrorCode::kNonPositiveInput, "log of a non-positive integer");
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  if (bits <= 64) {
    Integer t = n;
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof v, 0, 0, t.get_mpz_t());
    return std::log(static_cast<long double>(v));
  }
  Integer top;
  mpz_fdiv_q_2exp(top.get_mpz_t(), n.get_mpz_t(), bits - 64);
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof v, 0, 0, top.get_mpz_t());
  return std::log(static_cast<long double>(v)) +
         static_cast<long double>(bits - 64) * std::log(2.0L);
}

GrowthEstimate growth_constant(const Integer& m, std::size_t depth) {
  require_positive(m);
  if (depth > 16) fail(ErrorCode::kDepthExceeded, "growth depth must be at most 16");
  if (depth < 4) fail(ErrorCode::kInvalidArgument, "growth depth must be at least 4");

  const Integer s = sylvester(m, depth);
  const long double ln_s = log_integer(s);
  const long double scale = std::ldexp(1.0L, -static_cast<int>(depth));

  GrowthEstimate est;
  est.m = m;
  est.depth = depth;
  est.c_hat = std::exp(ln_s * scale);

  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Lf", est.c_hat);
  est.c_hat_str = buf;

  // With u_n = s_n - 1/2 one has u_{n+1} = u_n^2 + 1/4, which gives
  //   -2^-depth / s_depth <= ln c(m) - ln c_hat <= 0,
  // hence |c(m) - c_hat| <= c_hat * 2^-depth / s_depth.
  const long double log10_bound = std::log10(est.c_hat) -
                                  static_cast<long double>(depth) * std::log10(2.0L) -
                                  ln_s / std::log(10.0L);
  est.residual_bound = format_log10(log10_bound);

  const long double eps = std::ldexp(1.0L, -60);
  est.precision_bound =
      format_log10(std::log10(est.c_hat * (std::fabs(std::log(est.c_hat)) + 1) * eps));
  return est;
}

}  // namespace egypt
