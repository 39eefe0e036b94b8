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
#include "egypt/egypt.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/exactnum.hpp"
#include "core/expansion.hpp"
#include "core/gapfast.hpp"
#include "core/randwalk.hpp"
#include "core/recovery.hpp"
#include "core/render.hpp"
#include "core/scanner.hpp"
#include "core/sequences.hpp"

struct egypt_value {
  egypt::Value value;
};

struct egypt_expansion {
  egypt::Expansion expansion;
  std::vector<std::string> terms;
  std::vector<std::optional<std::string>> gaps;
  std::vector<std::string> remainders;
};

struct egypt_gap_trace {
  std::optional<egypt::GapTrace> fast;
  std::optional<egypt::NaiveGaps> naive;
  std::vector<std::string> c;
  std::vector<std::string> e;
  std::size_t steps = 0;
  std::size_t n0 = 0;
};

struct egypt_recovery {
  std::vector<egypt::RecoveryRecord> records;
  std::vector<std::string> terms;
};

namespace {

thread_local std::string last_error;

template <typename F>
egypt_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return EGYPT_OK;
  } catch (const egypt::Error& err) {
    last_error = err.what();
    return static_cast<egypt_status>(err.code());
  } catch (const std::bad_alloc&) {
    last_error = "InternalError: out of memory";
  } catch (const std::exception& err) {
    last_error = std::string("InternalError: ") + err.what();
  } catch (...) {
    last_error = "InternalError: unknown exception";
  }
  return EGYPT_E_INTERNAL;
}

void require(const void* ptr, const char* what) {
  if (ptr == nullptr) egypt::fail(egypt::ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

egypt::Format to_format(egypt_format format) {
  switch (format) {
    case EGYPT_FORMAT_TABLE: return egypt::Format::kTable;
    case EGYPT_FORMAT_JSON: return egypt::Format::kJson;
    case EGYPT_FORMAT_CSV: return egypt::Format::kCsv;
  }
  egypt::fail(egypt::ErrorCode::kInvalidArgument, "unknown output format");
}

egypt::ExpansionKind to_kind(egypt_kind kind) {
  switch (kind) {
    case EGYPT_KIND_GREEDY: return egypt::ExpansionKind::kGreedy;
    case EGYPT_KIND_ODD_GREEDY: return egypt::ExpansionKind::kOddGreedy;
    case EGYPT_KIND_PSEUDO_GREEDY: return egypt::ExpansionKind::kPseudoGreedy;
  }
  egypt::fail(egypt::ErrorCode::kInvalidArgument, "unknown expansion kind");
}

const char* at(const std::vector<std::string>& v, std::size_t i) {
  return i < v.size() ? v[i].c_str() : nullptr;
}

void write_file(const char* path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) egypt::fail(egypt::ErrorCode::kIo, std::string("cannot write ") + path);
}

}  // namespace

extern "C" {

const char* egypt_version(void) { return "0.1.0"; }

const char* egypt_status_name(egypt_status status) {
  if (status == EGYPT_OK) return "Ok";
  return egypt::error_name(static_cast<egypt::ErrorCode>(status)).data();
}

const char* egypt_last_error(void) { return last_error.c_str(); }

void egypt_string_free(char* s) { std::free(s); }

egypt_status egypt_value_parse(const char* text, egypt_value** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new egypt_value{egypt::parse_value(text)};
  });
}

void egypt_value_free(egypt_value* value) { delete value; }

int egypt_value_is_rational(const egypt_value* value) {
  return value != nullptr && value->value.is_rational() ? 1 : 0;
}

egypt_status egypt_value_to_string(const egypt_value* value, char** out) {
  return guarded([&] {
    require(value, "value");
    require(out, "out");
    *out = dup_string(value->value.str());
  });
}

egypt_status egypt_value_to_decimal(const egypt_value* value, unsigned digits, char** out) {
  return guarded([&] {
    require(value, "value");
    require(out, "out");
    if (digits > 1000000) egypt::fail(egypt::ErrorCode::kInvalidArgument, "at most 10^6 digits");
    *out = dup_string(value->value.decimal(digits));
  });
}

egypt_status egypt_value_nearest_int(const egypt_value* value, char** out) {
  return guarded([&] {
    require(value, "value");
    require(out, "out");
    *out = dup_string(egypt::to_string(value->value.nearest_int()));
  });
}

egypt_status egypt_expand(const egypt_value* r, egypt_kind kind, size_t max_terms,
                          size_t digit_cap, int continue_past_zero, egypt_expansion** out) {
  return guarded([&] {
    require(r, "r");
    require(out, "out");
    egypt::ExpandOptions options;
    options.max_terms = max_terms;
    options.digit_cap = digit_cap;
    options.continue_past_zero = continue_past_zero != 0;
    auto handle = std::make_unique<egypt_expansion>();
    handle->expansion = egypt::expand(r->value, to_kind(kind), options);
    for (const egypt::ExpansionRecord& rec : handle->expansion.records) {
      handle->terms.push_back(egypt::to_string(rec.a));
      handle->gaps.push_back(rec.eps ? std::optional<std::string>(rec.eps->str()) : std::nullopt);
      handle->remainders.push_back(rec.x.str());
    }
    *out = handle.release();
  });
}

void egypt_expansion_free(egypt_expansion* expansion) { delete expansion; }

size_t egypt_expansion_size(const egypt_expansion* expansion) {
  return expansion ? expansion->expansion.records.size() : 0;
}

egypt_expansion_status egypt_expansion_get_status(const egypt_expansion* expansion) {
  if (expansion == nullptr) return EGYPT_EXPANSION_MAX_TERMS;
  switch (expansion->expansion.status) {
    case egypt::ExpansionStatus::kExact: return EGYPT_EXPANSION_EXACT;
    case egypt::ExpansionStatus::kZeroGap: return EGYPT_EXPANSION_ZERO_GAP;
    case egypt::ExpansionStatus::kMaxTerms: break;
  }
  return EGYPT_EXPANSION_MAX_TERMS;
}

const char* egypt_expansion_term(const egypt_expansion* expansion, size_t i) {
  return expansion ? at(expansion->terms, i) : nullptr;
}

const char* egypt_expansion_gap(const egypt_expansion* expansion, size_t i) {
  if (expansion == nullptr || i >= expansion->gaps.size() || !expansion->gaps[i]) return nullptr;
  return expansion->gaps[i]->c_str();
}

const char* egypt_expansion_remainder(const egypt_expansion* expansion, size_t i) {
  return expansion ? at(expansion->remainders, i) : nullptr;
}

egypt_status egypt_expansion_render(const egypt_expansion* expansion, egypt_format format,
                                    char** out) {
  return guarded([&] {
    require(expansion, "expansion");
    require(out, "out");
    *out = dup_string(egypt::render(expansion->expansion, to_format(format)));
  });
}

egypt_status egypt_gaps(const char* p, const char* q, size_t max_terms, egypt_gap_method method,
                        int continue_past_zero, egypt_gap_trace** out) {
  return guarded([&] {
    require(p, "p");
    require(q, "q");
    require(out, "out");
    const egypt::Integer pp = egypt::parse_integer(p);
    const egypt::Integer qq = egypt::parse_integer(q);
    auto handle = std::make_unique<egypt_gap_trace>();
    if (method == EGYPT_GAPS_FAST) {
      egypt::FastOptions options;
      options.stop_at_zero = continue_past_zero == 0;
      handle->fast = egypt::gap_sequence_fast(pp, qq, max_terms, options);
      const egypt::GapTrace& t = *handle->fast;
      for (std::size_t i = 0; i < t.steps; ++i) {
        handle->c.push_back(egypt::to_string(t.c[i]));
        handle->e.push_back(egypt::to_string(t.e[i]));
      }
      handle->steps = t.steps;
      handle->n0 = t.n0.value_or(0);
    } else if (method == EGYPT_GAPS_NAIVE) {
      handle->naive = egypt::gap_sequence_naive(pp, qq, max_terms);
      for (const egypt::NaiveGapRecord& rec : handle->naive->records) {
        handle->c.push_back(egypt::to_string(rec.c));
        handle->e.push_back(egypt::to_string(rec.e));
        if (handle->n0 == 0 && sgn(rec.e) == 0) handle->n0 = rec.n;
      }
      handle->steps = handle->naive->records.size();
    } else {
      egypt::fail(egypt::ErrorCode::kInvalidArgument, "unknown gap method");
    }
    *out = handle.release();
  });
}

void egypt_gap_trace_free(egypt_gap_trace* trace) { delete trace; }

size_t egypt_gap_trace_steps(const egypt_gap_trace* trace) { return trace ? trace->steps : 0; }

int egypt_gap_trace_terminated(const egypt_gap_trace* trace) {
  return trace != nullptr && trace->n0 != 0 ? 1 : 0;
}

size_t egypt_gap_trace_n0(const egypt_gap_trace* trace) { return trace ? trace->n0 : 0; }

const char* egypt_gap_trace_c(const egypt_gap_trace* trace, size_t i) {
  return trace ? at(trace->c, i) : nullptr;
}

const char* egypt_gap_trace_e(const egypt_gap_trace* trace, size_t i) {
  return trace ? at(trace->e, i) : nullptr;
}

egypt_status egypt_gap_trace_render(const egypt_gap_trace* trace, egypt_format format, char** out) {
  return guarded([&] {
    require(trace, "trace");
    require(out, "out");
    *out = dup_string(trace->fast ? egypt::render(*trace->fast, to_format(format))
                                  : egypt::render(*trace->naive, to_format(format)));
  });
}

egypt_status egypt_gap_trace_compare(const egypt_gap_trace* fast, const egypt_gap_trace* naive,
                                     size_t prefix_cap, size_t* mismatches, char** report_json) {
  return guarded([&] {
    require(fast, "fast");
    require(naive, "naive");
    require(mismatches, "mismatches");
    if (!fast->fast || !naive->naive) {
      egypt::fail(egypt::ErrorCode::kInvalidArgument, "compare needs a fast and a naive trace");
    }
    const auto found = egypt::compare_traces(*fast->fast, *naive->naive, prefix_cap);
    *mismatches = found.size();
    if (report_json != nullptr) {
      const std::size_t compared =
          std::min({fast->steps, naive->steps, prefix_cap});
      *report_json = dup_string(
          egypt::render_mismatches_json(fast->fast->p, fast->fast->q, compared, found));
    }
  });
}

egypt_status egypt_verify_fast_vs_naive(unsigned long q_max, size_t prefix_cap,
                                        size_t* mismatches, char** report_json) {
  return guarded([&] {
    require(mismatches, "mismatches");
    const egypt::VerifyReport report = egypt::verify_fast_vs_naive(q_max, prefix_cap);
    *mismatches = report.mismatches.size();
    if (report_json != nullptr) *report_json = dup_string(egypt::render_json(report));
  });
}

egypt_status egypt_recover(const egypt_value* sum, const egypt_value* beta, size_t n_terms,
                           egypt_recovery** out) {
  return guarded([&] {
    require(sum, "sum");
    require(beta, "beta");
    require(out, "out");
    auto handle = std::make_unique<egypt_recovery>();
    handle->records = egypt::recover_sequence(sum->value, beta->value, n_terms);
    for (const egypt::RecoveryRecord& rec : handle->records) {
      handle->terms.push_back(egypt::to_string(rec.a));
    }
    *out = handle.release();
  });
}

void egypt_recovery_free(egypt_recovery* recovery) { delete recovery; }

size_t egypt_recovery_size(const egypt_recovery* recovery) {
  return recovery ? recovery->records.size() : 0;
}

const char* egypt_recovery_term(const egypt_recovery* recovery, size_t i) {
  return recovery ? at(recovery->terms, i) : nullptr;
}

egypt_status egypt_recovery_render(const egypt_recovery* recovery, egypt_format format,
                                   char** out) {
  return guarded([&] {
    require(recovery, "recovery");
    require(out, "out");
    *out = dup_string(egypt::render(recovery->records, to_format(format)));
  });
}

egypt_status egypt_threshold(const egypt_value* beta, char** out) {
  return guarded([&] {
    require(beta, "beta");
    require(out, "out");
    *out = dup_string(egypt::threshold(beta->value).str());
  });
}

egypt_status egypt_seq_sylvester(const char* m, size_t n_terms, egypt_format format, char** out) {
  return guarded([&] {
    require(m, "m");
    require(out, "out");
    const auto terms = egypt::sylvester_terms(egypt::parse_integer(m), n_terms);
    *out = dup_string(egypt::render_sequence(terms, to_format(format)));
  });
}

egypt_status egypt_seq_fib_pow2(size_t n_terms, egypt_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    const auto terms = egypt::fib_pow2_terms(n_terms);
    *out = dup_string(egypt::render_sequence(terms, to_format(format)));
  });
}

egypt_status egypt_seq_growth(const char* m, size_t depth, egypt_format format, char** out,
                              double* c_hat) {
  return guarded([&] {
    require(m, "m");
    const egypt::GrowthEstimate est = egypt::growth_constant(egypt::parse_integer(m), depth);
    if (c_hat != nullptr) *c_hat = static_cast<double>(est.c_hat);
    if (out != nullptr) *out = dup_string(egypt::render(est, to_format(format)));
  });
}

egypt_status egypt_scan(const egypt_scan_options* options, char** summary_json,
                        size_t* pairs_maxiter) {
  return guarded([&] {
    require(options, "options");
    require(options->out_path, "out_path");
    egypt::ScanOptions opt;
    opt.q_min = options->q_min;
    opt.q_max = options->q_max;
    opt.n_max = options->n_max;
    opt.jobs = options->jobs;
    opt.out_path = options->out_path;
    opt.resume = options->resume != 0;
    const egypt::ScanSummary summary = egypt::scan_conjecture(opt);
    if (pairs_maxiter != nullptr) *pairs_maxiter = summary.pairs_maxiter;
    if (summary_json != nullptr) *summary_json = dup_string(egypt::render_json(summary));
  });
}

egypt_status egypt_walk(const egypt_walk_options* options, egypt_format format, char** out) {
  return guarded([&] {
    require(options, "options");
    egypt::WalkParams params;
    params.c0 = options->c0;
    params.steps = options->steps;
    params.trials = options->trials;
    params.seed = options->seed;
    params.threads = options->threads;
    params.record_hits = options->hits_out != nullptr;
    const egypt::WalkStats stats = egypt::simulate_walk(params);
    if (options->hits_out != nullptr) write_file(options->hits_out, egypt::render_hits_csv(stats));
    if (out != nullptr) *out = dup_string(egypt::render(stats, to_format(format)));
  });
}

double egypt_analytic_drift(void) { return egypt::analytic_drift().value; }

}  // extern "C"
