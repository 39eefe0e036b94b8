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
#include "core/randwalk.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "core/error.hpp"

namespace egypt {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kChunk = 4096;

struct ChunkTotals {
  // Sums of (log t - shift), shifted by the analytic drift for stability.
  double sum = 0;
  double sum_sq = 0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  std::uint64_t hit_time_sum = 0;
};

}  // namespace

Drift analytic_drift() {
  return {"(3/2) ln 3 - ln 2 - 1", 1.5 * std::log(3.0) - std::log(2.0) - 1.0};
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial)
    : state_(mix64(seed ^ mix64(trial + kGolden))) {}

std::uint64_t TrialRng::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double TrialRng::next_uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

WalkStats simulate_walk(const WalkParams& params) {
  if (!(params.c0 >= 1.0) || !std::isfinite(params.c0)) {
    fail(ErrorCode::kInvalidArgument, "c0 must be a finite number >= 1");
  }
  if (params.steps == 0 || params.trials == 0) {
    fail(ErrorCode::kInvalidArgument, "steps and trials must be positive");
  }
  const double shift = analytic_drift().value;
  const double log_c0 = std::log(params.c0);
  const std::uint64_t n_chunks = (params.trials + kChunk - 1) / kChunk;

  WalkStats stats;
  stats.trials = params.trials;
  stats.steps = params.steps;
  stats.c0 = params.c0;
  stats.seed = params.seed;
  stats.generator_id = std::string(kGeneratorId);
  if (params.record_hits) stats.hit_steps.resize(params.trials);

  std::vector<ChunkTotals> totals(n_chunks);
  std::atomic<std::uint64_t> next_chunk{0};
  auto work = [&] {
    for (;;) {
      const std::uint64_t chunk = next_chunk.fetch_add(1);
      if (chunk >= n_chunks) return;
      ChunkTotals acc;
      const std::uint64_t end = std::min(params.trials, (chunk + 1) * kChunk);
      for (std::uint64_t trial = chunk * kChunk; trial < end; ++trial) {
        TrialRng rng(params.seed, trial);
        double log_c = log_c0;
        std::optional<std::uint64_t> hit;
        if (log_c <= 0) hit = 0;
        for (std::uint64_t s = 1; !hit && s <= params.steps; ++s) {
          const double lt = std::log(rng.next_t());
          const double dev = lt - shift;
          acc.sum += dev;
          acc.sum_sq += dev * dev;
          ++acc.samples;
          log_c += lt;
          if (log_c <= 0) hit = s;
        }
        if (hit) {
          ++acc.hits;
          acc.hit_time_sum += *hit;
        }
        if (params.record_hits) stats.hit_steps[trial] = hit;
      }
      totals[chunk] = acc;
    }
  };

  unsigned threads = params.threads ? params.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, n_chunks));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();

  // Fixed reduction order keeps the floating-point result independent of threads.
  double sum = 0;
  double sum_sq = 0;
  std::uint64_t hits = 0;
  std::uint64_t hit_time_sum = 0;
  for (const ChunkTotals& acc : totals) {
    sum += acc.sum;
    sum_sq += acc.sum_sq;
    stats.samples += acc.samples;
    hits += acc.hits;
    hit_time_sum += acc.hit_time_sum;
  }
  if (stats.samples > 0) {
    const double n = static_cast<double>(stats.samples);
    const double mean_dev = sum / n;
    stats.mean_log_t = shift + mean_dev;
    if (stats.samples > 1) {
      const double var = (sum_sq - n * mean_dev * mean_dev) / (n - 1);
      stats.stderr_log_t = std::sqrt(std::max(var, 0.0) / n);
    }
  }
  stats.hit_fraction = static_cast<double>(hits) / static_cast<double>(params.trials);
  if (hits > 0) {
    stats.mean_hit_time = static_cast<double>(hit_time_sum) / static_cast<double>(hits);
  }
  return stats;
}

}  // namespace egypt
