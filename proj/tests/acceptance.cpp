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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/error.hpp"
#include "core/expansion.hpp"
#include "core/gapfast.hpp"
#include "core/randwalk.hpp"
#include "core/recovery.hpp"
#include "core/scanner.hpp"
#include "core/sequences.hpp"

using namespace egypt;
using json = nlohmann::ordered_json;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string run_cli(const std::string& args, int& code) {
  const std::string cmd = "'" EGYPT_CLI_PATH "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    code = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

Rational rat(long p, long q) { return Rational(Integer(p), Integer(q)); }

Outcome table_11_29() {
  int code = 0;
  const std::string out = run_cli("expand --r 11/29 --kind pseudo --terms 6 --format json", code);
  if (code != 0) return {false, "cli exit " + std::to_string(code)};
  const std::vector<std::string> a = {"4", "9", "56", "2924", "10684297", "114154191699913"};
  const std::vector<std::string> x = {"11/29", "15/116", "19/1044", "5/14616", "1/10684296",
                                      "1/114154191699912"};
  const std::vector<std::string> eps = {"-4/11", "-4/15", "-1/19", "1/5", "0", "0"};
  std::istringstream in(out);
  std::string line;
  std::size_t i = 0;
  while (std::getline(in, line)) {
    const json j = json::parse(line);
    if (i >= 6 || j["a"] != a[i] || j["x"] != x[i] || j["eps"] != eps[i]) {
      return {false, "row " + std::to_string(i + 1) + ": " + line};
    }
    ++i;
  }
  if (i != 6) return {false, std::to_string(i) + " rows"};
  return {true, "6 rows match"};
}

Outcome fast_vs_naive() {
  const VerifyReport r = verify_fast_vs_naive(40, 12);
  return {r.mismatches.empty() && r.pairs_checked == 490,
          std::to_string(r.pairs_checked) + " pairs, " + std::to_string(r.terms_compared) +
              " terms, " + std::to_string(r.mismatches.size()) + " mismatches"};
}

Outcome scan_500() {
  const auto path = std::filesystem::temp_directory_path() / "egypt_acceptance_scan.csv";
  ScanOptions o;
  o.q_min = 1;
  o.q_max = 500;
  o.n_max = 10000;
  o.jobs = 1;
  o.out_path = path;
  const ScanSummary s = scan_conjecture(o);
  std::filesystem::remove(path);
  const std::size_t max_n0 = s.n0_histogram.empty() ? 0 : s.n0_histogram.rbegin()->first;
  return {s.pairs_maxiter == 0 && s.pairs_total == 76116,
          std::to_string(s.pairs_total) + " pairs, pairs_maxiter=" + std::to_string(s.pairs_maxiter) +
              ", max n0=" + std::to_string(max_n0)};
}

Outcome sylvester_recovery() {
  const auto s = sylvester_terms(Integer(1), 8);
  const auto rec = recover_sequence(Value(1), Value(1), 8);
  for (std::size_t i = 0; i < 8; ++i) {
    if (rec[i].a != s[i]) return {false, "r=1 term " + std::to_string(i + 1)};
  }
  for (long m = 1; m <= 30; ++m) {
    const auto sm = sylvester_terms(Integer(m), 6);
    const auto rm = recover_sequence(Value(rat(1, m)), Value(1), 6);
    for (std::size_t i = 0; i < 6; ++i) {
      if (rm[i].a != sm[i]) return {false, "m=" + std::to_string(m) + " term " + std::to_string(i + 1)};
    }
  }
  return {true, "r=1 and 1/m for m<=30"};
}

Outcome millin_recovery() {
  const Value sum = parse_value("(5-1 sqrt 5)/2");
  const auto rec = recover_sequence(sum, Value(rat(1, 3)), 8);
  std::vector<Integer> f;
  for (std::size_t n = 1; n <= 8; ++n) {
    f.push_back(fib_pow2(n));
    if (rec[n - 1].a != f.back()) return {false, "term " + std::to_string(n)};
  }
  const auto ch = verify_characterization(f, sum, parse_value("(0+1 sqrt 5)/5"));
  const Value tol(rat(1, 100));
  for (std::size_t n = 5; n <= 8; ++n) {
    const Value& d = ch[n - 1].delta;
    if ((tol - d).sign() <= 0 || (tol + d).sign() <= 0) return {false, "delta_" + std::to_string(n)};
  }
  return {true, "F_{2^n} for n<=8, |delta_n|<1/100 for 5<=n<=8"};
}

Outcome growth() {
  int code = 0;
  const std::string out = run_cli("seq growth --m 1 --depth 8 --format json", code);
  if (code != 0) return {false, "cli exit " + std::to_string(code)};
  const json j = json::parse(out);
  const double c = std::stod(j["c_hat"].get<std::string>());
  const double err = std::fabs(c - 1.2640847);
  std::ostringstream msg;
  msg << "c_hat=" << j["c_hat"].get<std::string>() << " |c_hat-1.2640847|=" << err;
  return {err <= 1e-6, msg.str()};
}

Outcome drift() {
  const double closed = 1.5 * std::log(3.0) - std::log(2.0) - 1.0;
  const double analytic = analytic_drift().value;
  WalkParams p;
  p.c0 = 1e300;
  p.steps = 1;
  p.trials = 1000000;
  p.seed = 20260101;
  const WalkStats s = simulate_walk(p);
  const double dev = std::fabs(*s.mean_log_t - analytic);
  std::ostringstream msg;
  msg << "drift=" << analytic << " mean=" << *s.mean_log_t << " stderr=" << *s.stderr_log_t;
  return {std::fabs(analytic - closed) < 1e-12 && std::fabs(analytic + 0.0452287) < 1e-7 &&
              dev <= 3 * *s.stderr_log_t,
          msg.str()};
}

Outcome invariants() {
  std::mt19937_64 rng(1009);
  std::uniform_int_distribution<long> dist(1, 1000000000L);
  const Rational half = rat(1, 2);
  std::size_t pairs = 0;
  std::size_t max_steps = 0;
  while (pairs < 200) {
    const long p = dist(rng);
    const long q = dist(rng);
    if (std::gcd(p, q) != 1) continue;
    ++pairs;
    FastOptions opt;
    opt.stop_at_zero = false;
    const GapTrace plain = gap_sequence_fast(Integer(p), Integer(q), 10000);
    if (!plain.n0) return {false, std::to_string(p) + "/" + std::to_string(q) + " no zero gap"};
    const GapTrace t = gap_sequence_fast(Integer(p), Integer(q), *plain.n0 + 3, opt);
    max_steps = std::max(max_steps, *plain.n0);
    const std::string who = std::to_string(p) + "/" + std::to_string(q);
    for (std::size_t k = 0; k < t.steps; ++k) {
      if (t.eps[k] < -half || t.eps[k] >= half) return {false, who + " eps range"};
      if (t.c[k + 1] != t.c[k] - t.e[k]) return {false, who + " c recurrence"};
      if (2 * t.c[k + 1] > 3 * t.c[k]) return {false, who + " c growth"};
      if (k > 0 && sgn(t.e[k - 1]) == 0 && sgn(t.e[k]) != 0) return {false, who + " persistence"};
    }
    const NaiveGaps naive = gap_sequence_naive(Integer(p), Integer(q), 8);
    if (!compare_traces(t, naive, 8).empty()) return {false, who + " naive prefix"};
    for (std::size_t k = 0; k + 1 < naive.records.size(); ++k) {
      const Rational a(naive.records[k].a);
      const Rational rhs = a * a / (Rational(1) - naive.records[k].eps) - a +
                           (Rational(1) - naive.records[k + 1].eps);
      if (Rational(naive.records[k + 1].a) != rhs) return {false, who + " PG-Sylvester"};
    }
  }
  return {true, std::to_string(pairs) + " pairs, max n0=" + std::to_string(max_steps)};
}

Outcome inequalities() {
  for (std::size_t n = 1; n <= 12; ++n) {
    const Integer a = fib_pow2(n);
    if (3 * a * a > 2 * fib_pow2(n + 1)) return {false, "n=" + std::to_string(n)};
  }
  const QuadraticValue head = QuadraticValue::from_rational(rat(1, 1) + rat(1, 3) + rat(1, 21), Integer(5));
  const QuadraticValue bound(rat(1583, 638), rat(-319, 638), Integer(5));
  if (quad_sign(head - bound) < 0) return {false, "1+1/3+1/21 below bound"};
  return {true, "n<=12 and 1+1/3+1/21 >= (1583-319 sqrt 5)/638"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"11/29 table reproduction", table_11_29},
      {"fast/naive equivalence q<=40", fast_vs_naive},
      {"scan q<=500 n_max=10^4", scan_500},
      {"Sylvester recovery", sylvester_recovery},
      {"Millin recovery", millin_recovery},
      {"growth constant c(1)", growth},
      {"log drift", drift},
      {"invariant property suite", invariants},
      {"exact inequalities", inequalities},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.ok) ++failures;
    std::printf("%s %d %s (%.2fs): %s\n", out.ok ? "PASS" : "FAIL", static_cast<int>(i + 1),
                criteria[i].first.c_str(), secs, out.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
