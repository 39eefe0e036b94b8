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
#include "core/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "core/error.hpp"

namespace egypt {

std::string_view scan_status_name(ScanStatus status) {
  return status == ScanStatus::kZero ? "ZERO" : "MAXITER";
}

TailDiagnostic diagnose_tail(const GapTrace& trace) {
  if (trace.steps == 0 || trace.e.empty()) {
    fail(ErrorCode::kInvalidArgument, "diagnose_tail needs a nonempty trace");
  }
  TailDiagnostic diag;
  std::size_t t = trace.e.size();
  while (t > 0 && sgn(trace.e[t - 1]) >= 0) --t;
  if (t < trace.e.size()) {
    diag.tail_sign_index = t + 1;
    bool ok = true;
    for (std::size_t k = t; k + 1 < trace.c.size(); ++k) ok = ok && trace.c[k] >= trace.c[k + 1];
    diag.c_nonincreasing_from_tail = ok;
  }
  if (trace.n0) {
    const std::size_t start = *trace.n0 - 1;
    bool constant = true;
    for (std::size_t k = start; k < trace.c.size(); ++k) constant = constant && trace.c[k] == trace.c[start];
    diag.c_constant_after_n0 = constant;
  }
  return diag;
}

ScanRecord scan_pair(const Integer& p, const Integer& q, std::size_t n_max) {
  const GapTrace trace = gap_sequence_fast(p, q, n_max);
  ScanRecord rec;
  rec.p = p;
  rec.q = q;
  rec.n0 = trace.n0;
  rec.steps = trace.steps;
  rec.max_c = *std::max_element(trace.c.begin(), trace.c.end());
  rec.status = trace.terminated ? ScanStatus::kZero : ScanStatus::kMaxIter;
  if (trace.steps > 0) rec.tail_sign_index = diagnose_tail(trace).tail_sign_index;
  return rec;
}

std::vector<ScanRecord> scan_q(unsigned long q, std::size_t n_max) {
  std::vector<ScanRecord> out;
  for (unsigned long p = 1; p <= q; ++p) {
    if (std::gcd(p, q) != 1) continue;
    out.push_back(scan_pair(Integer(p), Integer(q), n_max));
  }
  return out;
}

namespace {

std::string opt_str(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::size_t reduced_count(unsigned long q) {
  std::size_t n = 0;
  for (unsigned long p = 1; p <= q; ++p) n += std::gcd(p, q) == 1 ? 1 : 0;
  return n;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool is_digits(std::string_view field) {
  return !field.empty() &&
         std::all_of(field.begin(), field.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

std::size_t parse_size(std::string_view field, std::string_view line) {
  if (!is_digits(field) || field.size() > 18) {
    fail(ErrorCode::kCorruptCheckpoint, "bad number in row '" + std::string(line) + "'");
  }
  return std::stoull(std::string(field));
}

Integer parse_big(std::string_view field, std::string_view line) {
  if (!is_digits(field)) {
    fail(ErrorCode::kCorruptCheckpoint, "bad integer in row '" + std::string(line) + "'");
  }
  return Integer(std::string(field), 10);
}

void tally(ScanSummary& summary, const ScanRecord& rec) {
  ++summary.pairs_total;
  if (rec.status == ScanStatus::kZero) {
    ++summary.pairs_zero;
    ++summary.n0_histogram[*rec.n0];
  } else {
    ++summary.pairs_maxiter;
    summary.maxiter_pairs.emplace_back(rec.p, rec.q);
  }
  if (rec.max_c > summary.max_c) summary.max_c = rec.max_c;
}

struct Checkpoint {
  unsigned long next_q = 0;
  std::uintmax_t keep_bytes = 0;
  std::vector<ScanRecord> records;
  std::size_t complete_q_values = 0;
};

// Reads an existing output file and finds the last complete q block.
Checkpoint load_checkpoint(const std::filesystem::path& path, unsigned long q_min, unsigned long q_max) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot read checkpoint " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  Checkpoint cp;
  cp.next_q = q_min;
  const std::size_t header_end = text.find('\n');
  if (header_end == std::string::npos || std::string_view(text).substr(0, header_end) != kScanCsvHeader) {
    fail(ErrorCode::kCorruptCheckpoint, "missing or unexpected CSV header in " + path.string());
  }
  cp.keep_bytes = header_end + 1;

  std::vector<ScanRecord> block;
  unsigned long block_q = q_min;
  std::size_t pos = header_end + 1;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) break;  // torn final line
    const std::string_view line = std::string_view(text).substr(pos, eol - pos);
    ScanRecord rec = parse_csv_row(line);
    if (rec.q != block_q) {
      fail(ErrorCode::kCorruptCheckpoint, "row out of order (expected q=" + std::to_string(block_q) +
                                              "): '" + std::string(line) + "'");
    }
    const Integer expect_p = block.empty() ? Integer(0) : block.back().p;
    if (rec.p <= expect_p || gcd(rec.p, rec.q) != 1 || rec.p > rec.q) {
      fail(ErrorCode::kCorruptCheckpoint, "unexpected pair in row '" + std::string(line) + "'");
    }
    if (block_q > q_max) {
      fail(ErrorCode::kCorruptCheckpoint, "checkpoint extends past q_max=" + std::to_string(q_max));
    }
    block.push_back(std::move(rec));
    pos = eol + 1;
    if (block.size() == reduced_count(block_q)) {
      cp.records.insert(cp.records.end(), block.begin(), block.end());
      block.clear();
      cp.keep_bytes = pos;
      ++cp.complete_q_values;
      ++block_q;
    }
  }
  cp.next_q = block_q;
  return cp;
}

std::string render_block(const std::vector<ScanRecord>& records) {
  std::string out;
  for (const ScanRecord& rec : records) {
    out += to_csv_row(rec);
    out += '\n';
  }
  return out;
}

}  // namespace

std::string to_csv_row(const ScanRecord& rec) {
  return to_string(rec.p) + "," + to_string(rec.q) + "," + opt_str(rec.n0) + "," +
         std::to_string(rec.steps) + "," + to_string(rec.max_c) + "," +
         std::string(scan_status_name(rec.status)) + "," + opt_str(rec.tail_sign_index);
}

ScanRecord parse_csv_row(std::string_view line) {
  const auto fields = split(line, ',');
  if (fields.size() != 7) {
    fail(ErrorCode::kCorruptCheckpoint, "expected 7 fields in row '" + std::string(line) + "'");
  }
  ScanRecord rec;
  rec.p = parse_big(fields[0], line);
  rec.q = parse_big(fields[1], line);
  if (!fields[2].empty()) rec.n0 = parse_size(fields[2], line);
  rec.steps = parse_size(fields[3], line);
  rec.max_c = parse_big(fields[4], line);
  if (fields[5] == "ZERO") {
    rec.status = ScanStatus::kZero;
  } else if (fields[5] == "MAXITER") {
    rec.status = ScanStatus::kMaxIter;
  } else {
    fail(ErrorCode::kCorruptCheckpoint, "bad status in row '" + std::string(line) + "'");
  }
  if (!fields[6].empty()) rec.tail_sign_index = parse_size(fields[6], line);
  if ((rec.status == ScanStatus::kZero) != rec.n0.has_value()) {
    fail(ErrorCode::kCorruptCheckpoint, "status and n0 disagree in row '" + std::string(line) + "'");
  }
  return rec;
}

ScanSummary scan_conjecture(const ScanOptions& options) {
  if (options.q_min == 0 || options.q_min > options.q_max) {
    fail(ErrorCode::kInvalidArgument, "need 1 <= q_min <= q_max");
  }
  if (options.n_max == 0) fail(ErrorCode::kInvalidArgument, "n_max must be positive");
  const auto started = std::chrono::steady_clock::now();

  ScanSummary summary;
  summary.q_min = options.q_min;
  summary.q_max = options.q_max;
  summary.n_max = options.n_max;

  unsigned long first_q = options.q_min;
  std::ofstream out;
  const bool have_file = std::filesystem::exists(options.out_path);
  if (options.resume && have_file) {
    Checkpoint cp = load_checkpoint(options.out_path, options.q_min, options.q_max);
    std::error_code ec;
    std::filesystem::resize_file(options.out_path, cp.keep_bytes, ec);
    if (ec) fail(ErrorCode::kIo, "cannot truncate " + options.out_path.string() + ": " + ec.message());
    for (const ScanRecord& rec : cp.records) tally(summary, rec);
    summary.resumed_q_values = cp.complete_q_values;
    first_q = cp.next_q;
    out.open(options.out_path, std::ios::binary | std::ios::app);
  } else {
    out.open(options.out_path, std::ios::binary | std::ios::trunc);
    if (out) out << kScanCsvHeader << '\n';
  }
  if (!out) fail(ErrorCode::kIo, "cannot open " + options.out_path.string() + " for writing");

  const unsigned jobs = std::max(1u, options.jobs);
  const unsigned long window = 4UL * jobs + 16;

  std::mutex mu;
  std::condition_variable cv;
  std::map<unsigned long, std::vector<ScanRecord>> ready;
  unsigned long next_to_write = first_q;
  std::atomic<unsigned long> next_to_claim{first_q};
  std::exception_ptr error;
  bool stop = false;

  auto worker = [&] {
    for (;;) {
      const unsigned long q = next_to_claim.fetch_add(1);
      if (q > options.q_max) return;
      {
        // Keep workers within a bounded distance of the writer.
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return stop || q < next_to_write + window; });
        if (stop) return;
      }
      std::vector<ScanRecord> recs;
      try {
        recs = scan_q(q, options.n_max);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        stop = true;
        cv.notify_all();
        return;
      }
      std::lock_guard lock(mu);
      ready.emplace(q, std::move(recs));
      cv.notify_all();
    }
  };

  std::vector<std::thread> threads;
  if (first_q <= options.q_max) {
    for (unsigned i = 0; i < jobs; ++i) threads.emplace_back(worker);
  }
  try {
    while (next_to_write <= options.q_max) {
      std::vector<ScanRecord> recs;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return stop || ready.count(next_to_write) > 0; });
        if (stop) break;
        auto node = ready.extract(next_to_write);
        recs = std::move(node.mapped());
      }
      out << render_block(recs);
      out.flush();
      if (!out) fail(ErrorCode::kIo, "write to " + options.out_path.string() + " failed");
      for (const ScanRecord& rec : recs) tally(summary, rec);
      std::lock_guard lock(mu);
      ++next_to_write;
      cv.notify_all();
    }
  } catch (...) {
    std::lock_guard lock(mu);
    if (!error) error = std::current_exception();
    stop = true;
    cv.notify_all();
  }
  for (std::thread& t : threads) t.join();
  if (error) std::rethrow_exception(error);

  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return summary;
}

}  // namespace egypt
