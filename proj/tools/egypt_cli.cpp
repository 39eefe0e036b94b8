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
// Command-line front end. Talks to the library only through egypt.h.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "egypt/egypt.h"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct StringDeleter {
  void operator()(char* s) const { egypt_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ValueDeleter {
  void operator()(egypt_value* v) const { egypt_value_free(v); }
};
using OwnedValue = std::unique_ptr<egypt_value, ValueDeleter>;

// Thrown out of a subcommand when the library reports an error.
struct DomainFailure {
  egypt_status status;
};

void check(egypt_status status) {
  if (status != EGYPT_OK) throw DomainFailure{status};
}

void emit(char* text) {
  OwnedString owned(text);
  std::fputs(owned.get(), stdout);
}

OwnedValue parse(const std::string& text) {
  egypt_value* v = nullptr;
  check(egypt_value_parse(text.c_str(), &v));
  return OwnedValue(v);
}

egypt_format to_format(const std::string& name) {
  if (name == "json") return EGYPT_FORMAT_JSON;
  if (name == "csv") return EGYPT_FORMAT_CSV;
  return EGYPT_FORMAT_TABLE;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::size_t default_digit_cap() {
  if (const char* env = std::getenv("EGYPT_DIGIT_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    std::cerr << "egypt: ignoring invalid EGYPT_DIGIT_CAP='" << env << "'\n";
  }
  return 10000;
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact unit-fraction expansions, gap sequences and reciprocal-sum recovery"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(egypt_version()));
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Suppress warnings on stderr");

  // expand
  std::string r_text;
  std::string kind = "pseudo";
  std::size_t terms = 10;
  std::size_t digit_cap = 0;
  bool continue_past_zero = false;
  std::string format = "table";
  auto* expand = app.add_subcommand("expand", "Greedy, odd-greedy or pseudo-greedy expansion");
  expand->add_option("--r", r_text, "Positive exact value, e.g. 11/29 or \"(5-1 sqrt 5)/2\"")->required();
  expand->add_option("--kind", kind, "Expansion kind")
      ->check(CLI::IsMember({"greedy", "odd", "pseudo"}))
      ->capture_default_str();
  expand->add_option("--terms", terms, "Maximum number of terms")->check(CLI::PositiveNumber)->required();
  expand->add_option("--digit-cap", digit_cap, "Omit d once it has more decimal digits than this")
      ->check(CLI::PositiveNumber);
  expand->add_flag("--continue-past-zero", continue_past_zero,
                   "Keep computing residues after the first zero gap");
  add_format(expand, format);

  // gaps
  std::string method = "fast";
  auto* gaps = app.add_subcommand("gaps", "Gap sequence of the pseudo-greedy expansion of p/q");
  gaps->add_option("--r", r_text, "Reduced fraction p/q")->required();
  gaps->add_option("--terms", terms, "Maximum number of terms")->check(CLI::PositiveNumber)->required();
  gaps->add_option("--method", method, "fast, naive, or both (mismatch report)")
      ->check(CLI::IsMember({"fast", "naive", "both"}))
      ->capture_default_str();
  add_format(gaps, format);

  // scan
  unsigned long qmin = 1;
  unsigned long qmax = 1;
  std::size_t maxiter = 10000;
  std::string out_path;
  bool resume = false;
  unsigned jobs = 1;
  auto* scan = app.add_subcommand("scan", "Check eventual zero gaps for all reduced p/q in a q range");
  scan->add_option("--qmin", qmin, "Smallest q")->check(CLI::PositiveNumber)->capture_default_str();
  scan->add_option("--qmax", qmax, "Largest q")->check(CLI::PositiveNumber)->required();
  scan->add_option("--maxiter", maxiter, "Iteration budget per pair")->check(CLI::PositiveNumber)->capture_default_str();
  scan->add_option("--out", out_path, "Output CSV path")->required();
  scan->add_flag("--resume", resume, "Keep complete q values already in --out");
  scan->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  // recover
  std::string sum_text;
  std::string beta_text;
  auto* recover = app.add_subcommand("recover", "Rebuild a sequence from its reciprocal sum");
  recover->add_option("--sum", sum_text, "Reciprocal sum r")->required();
  recover->add_option("--beta", beta_text, "Offset beta >= 0")->required();
  recover->add_option("--terms", terms, "Number of terms")->check(CLI::PositiveNumber)->required();
  add_format(recover, format);

  // seq
  std::string m_text = "1";
  std::size_t depth = 8;
  auto* seq = app.add_subcommand("seq", "Reference sequences");
  seq->require_subcommand(1);
  auto* seq_syl = seq->add_subcommand("sylvester", "s_n(m): s_1 = m + 1, s_{n+1} = s_n^2 - s_n + 1");
  seq_syl->add_option("--m", m_text, "m >= 1")->capture_default_str();
  seq_syl->add_option("--terms", terms, "Number of terms")->check(CLI::PositiveNumber)->required();
  add_format(seq_syl, format);
  auto* seq_fib = seq->add_subcommand("fib2", "F_{2^n}");
  seq_fib->add_option("--terms", terms, "Number of terms")->check(CLI::PositiveNumber)->required();
  add_format(seq_fib, format);
  auto* seq_growth = seq->add_subcommand("growth", "Growth constant c(m) with s_n(m) ~ c(m)^(2^n)");
  seq_growth->add_option("--m", m_text, "m >= 1")->capture_default_str();
  seq_growth->add_option("--depth", depth, "Depth, 4..16")->capture_default_str();
  add_format(seq_growth, format);

  // walk
  double c0 = 1;
  std::uint64_t steps = 1;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string hits_out;
  auto* walk = app.add_subcommand("walk", "Multiplicative random walk c <- t c, t uniform on [1/2, 3/2)");
  walk->add_option("--c0", c0, "Starting value >= 1")->required();
  walk->add_option("--steps", steps, "Step cap per trial")->check(CLI::PositiveNumber)->required();
  walk->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber)->required();
  walk->add_option("--seed", seed, "64-bit seed")->required();
  walk->add_option("--threads", threads, "Worker threads (0: all cores)")->capture_default_str();
  walk->add_option("--hits-out", hits_out, "Write trial,hit_step CSV here");
  add_format(walk, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const egypt_format fmt = to_format(format);
  try {
    if (*expand) {
      OwnedValue r = parse(r_text);
      const egypt_kind k = kind == "greedy" ? EGYPT_KIND_GREEDY
                           : kind == "odd"  ? EGYPT_KIND_ODD_GREEDY
                                            : EGYPT_KIND_PSEUDO_GREEDY;
      egypt_expansion* raw = nullptr;
      check(egypt_expand(r.get(), k, terms, digit_cap ? digit_cap : default_digit_cap(),
                         continue_past_zero ? 1 : 0, &raw));
      std::unique_ptr<egypt_expansion, decltype(&egypt_expansion_free)> exp(raw, egypt_expansion_free);
      char* text = nullptr;
      check(egypt_expansion_render(exp.get(), fmt, &text));
      emit(text);
      const egypt_expansion_status st = egypt_expansion_get_status(exp.get());
      if (st == EGYPT_EXPANSION_MAX_TERMS && !quiet) {
        std::cerr << (k == EGYPT_KIND_ODD_GREEDY ? "NONTERMINATED" : "MaxTermsExceeded")
                  << ": stopped after " << egypt_expansion_size(exp.get()) << " terms\n";
      }
    } else if (*gaps) {
      const std::string text = trim(r_text);
      const auto slash = text.find('/');
      const std::string p = trim(text.substr(0, slash));
      const std::string q = slash == std::string::npos ? "1" : trim(text.substr(slash + 1));
      using Trace = std::unique_ptr<egypt_gap_trace, decltype(&egypt_gap_trace_free)>;
      auto run = [&](egypt_gap_method m) {
        egypt_gap_trace* raw = nullptr;
        check(egypt_gaps(p.c_str(), q.c_str(), terms, m, 0, &raw));
        return Trace(raw, egypt_gap_trace_free);
      };
      if (method == "both") {
        Trace fast = run(EGYPT_GAPS_FAST);
        Trace naive = run(EGYPT_GAPS_NAIVE);
        std::size_t mismatches = 0;
        char* report = nullptr;
        check(egypt_gap_trace_compare(fast.get(), naive.get(), terms, &mismatches, &report));
        OwnedString owned(report);
        if (fmt == EGYPT_FORMAT_JSON) {
          std::fputs(owned.get(), stdout);
        } else {
          std::printf("%zu mismatch(es) between fast and naive for %s/%s\n", mismatches, p.c_str(),
                      q.c_str());
          if (mismatches) std::fputs(owned.get(), stdout);
        }
        return mismatches ? kExitDomain : 0;
      }
      Trace trace = run(method == "fast" ? EGYPT_GAPS_FAST : EGYPT_GAPS_NAIVE);
      char* out = nullptr;
      check(egypt_gap_trace_render(trace.get(), fmt, &out));
      emit(out);
      if (method == "fast" && !quiet && !egypt_gap_trace_terminated(trace.get())) {
        std::cerr << "NMaxExceeded: no zero gap within " << terms << " steps\n";
      }
    } else if (*scan) {
      egypt_scan_options opt{qmin, qmax, maxiter, jobs, out_path.c_str(), resume ? 1 : 0};
      char* summary = nullptr;
      std::size_t maxiter_pairs = 0;
      check(egypt_scan(&opt, &summary, &maxiter_pairs));
      emit(summary);
      if (maxiter_pairs && !quiet) {
        std::cerr << "WARNING: " << maxiter_pairs
                  << " pair(s) reached --maxiter without a zero gap; see maxiter_pairs and the "
                     "MAXITER rows in "
                  << out_path << "\n";
      }
    } else if (*recover) {
      OwnedValue sum = parse(sum_text);
      OwnedValue beta = parse(beta_text);
      egypt_recovery* raw = nullptr;
      check(egypt_recover(sum.get(), beta.get(), terms, &raw));
      std::unique_ptr<egypt_recovery, decltype(&egypt_recovery_free)> rec(raw, egypt_recovery_free);
      char* out = nullptr;
      check(egypt_recovery_render(rec.get(), fmt, &out));
      emit(out);
    } else if (*seq) {
      char* out = nullptr;
      if (*seq_syl) {
        check(egypt_seq_sylvester(m_text.c_str(), terms, fmt, &out));
      } else if (*seq_fib) {
        check(egypt_seq_fib_pow2(terms, fmt, &out));
      } else {
        check(egypt_seq_growth(m_text.c_str(), depth, fmt, &out, nullptr));
      }
      emit(out);
    } else if (*walk) {
      egypt_walk_options opt{c0, steps, trials, seed, threads,
                             hits_out.empty() ? nullptr : hits_out.c_str()};
      char* out = nullptr;
      check(egypt_walk(&opt, fmt, &out));
      emit(out);
    }
  } catch (const DomainFailure& failure) {
    std::cerr << "egypt: " << egypt_last_error() << "\n";
    return failure.status == EGYPT_E_INVALID_ARGUMENT ? kExitUsage : kExitDomain;
  }
  return 0;
}
