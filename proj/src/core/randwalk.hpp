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
#ifndef EGYPT_CORE_RANDWALK_HPP
#define EGYPT_CORE_RANDWALK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace egypt {

// Multiplicative random-walk model of c_{n+1} = t_n c_n with t_n uniform on [1/2, 3/2).

struct Drift {
  std::string_view expression;
  double value = 0;
};

/// E[log t] = (3/2) ln 3 - ln 2 - 1.
Drift analytic_drift();

inline constexpr std::string_view kGeneratorId = "splitmix64/trial-keyed/v1";

/// SplitMix64 stream whose starting state is derived from (seed, trial) alone,
/// so trial k draws the same numbers however trials are spread over threads.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next_u64();
  // Top 53 bits scaled into [0, 1).
  double next_uniform();
  // 1/2 + u, in [1/2, 3/2).
  double next_t() { return 0.5 + next_uniform(); }

 private:
  std::uint64_t state_;
};

struct WalkParams {
  double c0 = 1;
  std::uint64_t steps = 1;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
  bool record_hits = false;
};

struct WalkStats {
  std::uint64_t trials = 0;
  std::uint64_t steps = 0;
  double c0 = 1;
  std::uint64_t samples = 0;  // number of t draws
  std::optional<double> mean_log_t;
  std::optional<double> stderr_log_t;
  double hit_fraction = 0;  // trials reaching c <= 1
  std::optional<double> mean_hit_time;
  std::uint64_t seed = 0;
  std::string generator_id;
  // Per trial, the first step with c <= 1 (0 when c0 <= 1), if record_hits.
  std::vector<std::optional<std::uint64_t>> hit_steps;
};

/// Runs the walks in log space. Results are bit-identical for a given
/// (seed, parameters) regardless of the thread count.
WalkStats simulate_walk(const WalkParams& params);

}  // namespace egypt

#endif  // EGYPT_CORE_RANDWALK_HPP
