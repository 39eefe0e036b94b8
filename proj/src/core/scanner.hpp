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
#ifndef EGYPT_CORE_SCANNER_HPP
#define EGYPT_CORE_SCANNER_HPP

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/exactnum.hpp"
#include "core/gapfast.hpp"

namespace egypt {

enum class ScanStatus { kZero, kMaxIter };

std::string_view scan_status_name(ScanStatus status);

struct ScanRecord {
  Integer p;
  Integer q;
  std::optional<std::size_t> n0;
  std::size_t steps = 0;
  Integer max_c;
  ScanStatus status = ScanStatus::kMaxIter;
  std::optional<std::size_t> tail_sign_index;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

struct TailDiagnostic {
  // Smallest t with e_k >= 0 for every observed k >= t.
  std::optional<std::size_t> tail_sign_index;
  // c_k >= c_{k+1} for k >= t, checked against the c array.
  bool c_nonincreasing_from_tail = false;
  // Terminated traces only: c_k == c_{n0} for all k >= n0.
  std::optional<bool> c_constant_after_n0;
};

/// Finite-prefix version of the nonnegative-tail mechanism: once e_k >= 0 for
/// good, c_{k+1} = c_k - e_k can only shrink.
TailDiagnostic diagnose_tail(const GapTrace& trace);

ScanRecord scan_pair(const Integer& p, const Integer& q, std::size_t n_max);
// Records for every reduced p/q with 1 <= p <= q, ordered by p.
std::vector<ScanRecord> scan_q(unsigned long q, std::size_t n_max);

struct ScanOptions {
  unsigned long q_min = 1;
  unsigned long q_max = 1;
  std::size_t n_max = 10000;
  unsigned jobs = 1;
  std::filesystem::path out_path;
  bool resume = false;
};

struct ScanSummary {
  unsigned long q_min = 0;
  unsigned long q_max = 0;
  std::size_t n_max = 0;
  std::size_t pairs_total = 0;
  std::size_t pairs_zero = 0;
  std::size_t pairs_maxiter = 0;
  std::map<std::size_t, std::size_t> n0_histogram;
  Integer max_c;
  double wall_seconds = 0;
  // q values taken over from an existing checkpoint.
  std::size_t resumed_q_values = 0;
  std::vector<std::pair<Integer, Integer>> maxiter_pairs;
};

/// Runs gap_sequence_fast over every reduced p/q with q_min <= q <= q_max and
/// writes one CSV row per pair in (q, p) order, whatever the number of jobs.
/// With resume, q values already complete in out_path are kept and skipped;
/// a trailing partial q block is discarded and recomputed.
ScanSummary scan_conjecture(const ScanOptions& options);

inline constexpr std::string_view kScanCsvHeader = "p,q,n0,steps,max_c,status,tail_sign_index";

std::string to_csv_row(const ScanRecord& rec);
// Throws CorruptCheckpoint on malformed rows.
ScanRecord parse_csv_row(std::string_view line);

}  // namespace egypt

#endif  // EGYPT_CORE_SCANNER_HPP
