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
#ifndef EGYPT_EGYPT_H
#define EGYPT_EGYPT_H

/*
 * C interface to the egypt library: exact unit-fraction expansions, gap
 * sequences, reciprocal-sum recovery, conjecture scans and the random-walk
 * model.
 *
 * Conventions:
 *  - Every fallible call returns egypt_status; EGYPT_OK is 0.
 *  - On failure, egypt_last_error() holds a message for the calling thread.
 *  - Objects returned through an out-pointer are owned by the caller and
 *    released with the matching *_free function.
 *  - char* results are released with egypt_string_free.
 *  - const char* accessors point into the owning object and stay valid until
 *    it is freed.
 *  - Big integers cross the boundary as decimal strings.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(EGYPT_BUILDING_LIBRARY)
#define EGYPT_API __attribute__((visibility("default")))
#else
#define EGYPT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum egypt_status {
  EGYPT_OK = 0,
  EGYPT_E_PARSE = 1,
  EGYPT_E_NON_POSITIVE_INPUT = 2,
  EGYPT_E_DIVISION_BY_ZERO = 3,
  EGYPT_E_RADICAND_MISMATCH = 4,
  EGYPT_E_INVALID_RADICAND = 5,
  EGYPT_E_DEPTH_EXCEEDED = 6,
  EGYPT_E_NOT_REDUCED = 7,
  EGYPT_E_ODD_GREEDY_ON_IRRATIONAL = 8,
  EGYPT_E_NEGATIVE_BETA = 9,
  EGYPT_E_RECOVERY_BREAKDOWN = 10,
  EGYPT_E_SUM_EXCEEDS = 11,
  EGYPT_E_IO = 12,
  EGYPT_E_CORRUPT_CHECKPOINT = 13,
  EGYPT_E_INVALID_ARGUMENT = 14,
  EGYPT_E_INTERNAL = 15
} egypt_status;

typedef enum egypt_format {
  EGYPT_FORMAT_TABLE = 0,
  EGYPT_FORMAT_JSON = 1,
  EGYPT_FORMAT_CSV = 2
} egypt_format;

typedef enum egypt_kind {
  EGYPT_KIND_GREEDY = 0,
  EGYPT_KIND_ODD_GREEDY = 1,
  EGYPT_KIND_PSEUDO_GREEDY = 2
} egypt_kind;

typedef enum egypt_expansion_status {
  EGYPT_EXPANSION_EXACT = 0,     /* remainder reached zero */
  EGYPT_EXPANSION_ZERO_GAP = 1,  /* pseudo-greedy reached a zero gap */
  EGYPT_EXPANSION_MAX_TERMS = 2  /* stopped by max_terms (NONTERMINATED) */
} egypt_expansion_status;

typedef enum egypt_gap_method {
  EGYPT_GAPS_FAST = 0,
  EGYPT_GAPS_NAIVE = 1
} egypt_gap_method;

typedef struct egypt_value egypt_value;
typedef struct egypt_expansion egypt_expansion;
typedef struct egypt_gap_trace egypt_gap_trace;
typedef struct egypt_recovery egypt_recovery;

EGYPT_API const char* egypt_version(void);
/* Stable error name, e.g. "NotReduced". */
EGYPT_API const char* egypt_status_name(egypt_status status);
EGYPT_API const char* egypt_last_error(void);
EGYPT_API void egypt_string_free(char* s);

/* ---- exact values: "11/29", "7", "(5-1 sqrt 5)/2" ---- */
EGYPT_API egypt_status egypt_value_parse(const char* text, egypt_value** out);
EGYPT_API void egypt_value_free(egypt_value* value);
EGYPT_API int egypt_value_is_rational(const egypt_value* value);
EGYPT_API egypt_status egypt_value_to_string(const egypt_value* value, char** out);
EGYPT_API egypt_status egypt_value_to_decimal(const egypt_value* value, unsigned digits, char** out);
EGYPT_API egypt_status egypt_value_nearest_int(const egypt_value* value, char** out);

/* ---- expansions ---- */
EGYPT_API egypt_status egypt_expand(const egypt_value* r, egypt_kind kind, size_t max_terms,
                                    size_t digit_cap, int continue_past_zero,
                                    egypt_expansion** out);
EGYPT_API void egypt_expansion_free(egypt_expansion* expansion);
EGYPT_API size_t egypt_expansion_size(const egypt_expansion* expansion);
EGYPT_API egypt_expansion_status egypt_expansion_get_status(const egypt_expansion* expansion);
/* Term a_{i+1}. NULL when i is out of range. */
EGYPT_API const char* egypt_expansion_term(const egypt_expansion* expansion, size_t i);
/* Gap eps_{i+1} in exact form, NULL when absent or out of range. */
EGYPT_API const char* egypt_expansion_gap(const egypt_expansion* expansion, size_t i);
/* Remainder x_{i+1} in reduced exact form. */
EGYPT_API const char* egypt_expansion_remainder(const egypt_expansion* expansion, size_t i);
EGYPT_API egypt_status egypt_expansion_render(const egypt_expansion* expansion,
                                              egypt_format format, char** out);

/* ---- gap sequences for p/q (decimal strings; p/q must be reduced) ---- */
EGYPT_API egypt_status egypt_gaps(const char* p, const char* q, size_t max_terms,
                                  egypt_gap_method method, int continue_past_zero,
                                  egypt_gap_trace** out);
EGYPT_API void egypt_gap_trace_free(egypt_gap_trace* trace);
EGYPT_API size_t egypt_gap_trace_steps(const egypt_gap_trace* trace);
EGYPT_API int egypt_gap_trace_terminated(const egypt_gap_trace* trace);
/* First index with e = 0, or 0 when there is none. */
EGYPT_API size_t egypt_gap_trace_n0(const egypt_gap_trace* trace);
EGYPT_API const char* egypt_gap_trace_c(const egypt_gap_trace* trace, size_t i);
EGYPT_API const char* egypt_gap_trace_e(const egypt_gap_trace* trace, size_t i);
EGYPT_API egypt_status egypt_gap_trace_render(const egypt_gap_trace* trace, egypt_format format,
                                              char** out);
/* Compares a fast trace with a naive one on their common prefix (capped at
 * prefix_cap); writes the mismatch count and a JSON report. */
EGYPT_API egypt_status egypt_gap_trace_compare(const egypt_gap_trace* fast,
                                               const egypt_gap_trace* naive, size_t prefix_cap,
                                               size_t* mismatches, char** report_json);
/* Fast vs naive over every reduced p <= q <= q_max. */
EGYPT_API egypt_status egypt_verify_fast_vs_naive(unsigned long q_max, size_t prefix_cap,
                                                  size_t* mismatches, char** report_json);

/* ---- reciprocal-sum recovery ---- */
EGYPT_API egypt_status egypt_recover(const egypt_value* sum, const egypt_value* beta,
                                     size_t n_terms, egypt_recovery** out);
EGYPT_API void egypt_recovery_free(egypt_recovery* recovery);
EGYPT_API size_t egypt_recovery_size(const egypt_recovery* recovery);
EGYPT_API const char* egypt_recovery_term(const egypt_recovery* recovery, size_t i);
EGYPT_API egypt_status egypt_recovery_render(const egypt_recovery* recovery, egypt_format format,
                                             char** out);
/* 8 (beta + 1/3)^2 in exact form. */
EGYPT_API egypt_status egypt_threshold(const egypt_value* beta, char** out);

/* ---- reference sequences ---- */
EGYPT_API egypt_status egypt_seq_sylvester(const char* m, size_t n_terms, egypt_format format,
                                           char** out);
EGYPT_API egypt_status egypt_seq_fib_pow2(size_t n_terms, egypt_format format, char** out);
EGYPT_API egypt_status egypt_seq_growth(const char* m, size_t depth, egypt_format format,
                                        char** out, double* c_hat);

/* ---- conjecture scan ---- */
typedef struct egypt_scan_options {
  unsigned long q_min;
  unsigned long q_max;
  size_t n_max;
  unsigned jobs;
  const char* out_path;
  int resume;
} egypt_scan_options;

EGYPT_API egypt_status egypt_scan(const egypt_scan_options* options, char** summary_json,
                                  size_t* pairs_maxiter);

/* ---- random-walk model ---- */
typedef struct egypt_walk_options {
  double c0;
  uint64_t steps;
  uint64_t trials;
  uint64_t seed;
  unsigned threads; /* 0: hardware concurrency */
  const char* hits_out; /* optional trial,hit_step CSV path */
} egypt_walk_options;

EGYPT_API egypt_status egypt_walk(const egypt_walk_options* options, egypt_format format,
                                  char** out);
EGYPT_API double egypt_analytic_drift(void);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* EGYPT_EGYPT_H */
