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
#include "core/render.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>

#include <json.hpp>

#include "core/error.hpp"

namespace egypt {

namespace {

using json = nlohmann::ordered_json;

json opt_json(const std::optional<Integer>& v) { return v ? json(to_string(*v)) : json(nullptr); }
json opt_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }
json opt_json(const std::optional<Value>& v) { return v ? json(v->str()) : json(nullptr); }
json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string opt_text(const std::optional<Integer>& v) { return v ? to_string(*v) : ""; }
std::string opt_text(const std::optional<Value>& v) { return v ? v->str() : ""; }

json string_array(const std::vector<Integer>& xs) {
  json arr = json::array();
  for (const Integer& x : xs) arr.push_back(to_string(x));
  return arr;
}

// Left-aligned columns separated by two spaces.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::string str() const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
      }
      out += line + "\n";
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out + "\n";
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

struct GapRow {
  std::size_t n;
  std::string c;
  std::string e;
  std::string eps;
};

std::string render_gap_rows(const std::vector<GapRow>& rows, Format format) {
  if (format == Format::kCsv) {
    std::string out = "n,c,e,eps\n";
    for (const GapRow& r : rows) out += csv_line({std::to_string(r.n), r.c, r.e, r.eps});
    return out;
  }
  Table table({"n", "c", "e", "eps"});
  for (const GapRow& r : rows) table.add({std::to_string(r.n), r.c, r.e, r.eps});
  return table.str();
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "table") return Format::kTable;
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  fail(ErrorCode::kInvalidArgument, "unknown format '" + std::string(text) + "'");
}

std::string render(const Expansion& expansion, Format format) {
  std::string out;
  switch (format) {
    case Format::kJson:
      for (const ExpansionRecord& rec : expansion.records) {
        json j;
        j["n"] = rec.n;
        j["a"] = to_string(rec.a);
        j["x"] = rec.x.str();
        j["c"] = opt_json(rec.c);
        j["d"] = opt_json(rec.d);
        j["e"] = opt_json(rec.e);
        j["eps"] = opt_json(rec.eps);
        j["implied"] = rec.implied;
        out += j.dump() + "\n";
      }
      return out;
    case Format::kCsv:
      out = "n,a,x,c,d,e,eps\n";
      for (const ExpansionRecord& rec : expansion.records) {
        out += csv_line({std::to_string(rec.n), to_string(rec.a), rec.x.str(), opt_text(rec.c),
                         opt_text(rec.d), opt_text(rec.e), opt_text(rec.eps)});
      }
      return out;
    case Format::kTable: {
      Table table({"n", "a", "x", "eps", "c", "e"});
      for (const ExpansionRecord& rec : expansion.records) {
        table.add({std::to_string(rec.n) + (rec.implied ? "*" : ""), to_string(rec.a), rec.x.str(),
                   opt_text(rec.eps), opt_text(rec.c), opt_text(rec.e)});
      }
      return table.str();
    }
  }
  return out;
}

std::string render(const GapTrace& trace, Format format) {
  if (format == Format::kJson) {
    json j;
    j["p"] = to_string(trace.p);
    j["q"] = to_string(trace.q);
    j["c"] = string_array(trace.c);
    j["e"] = string_array(trace.e);
    j["n0"] = opt_json(trace.n0);
    j["steps"] = trace.steps;
    j["terminated"] = trace.terminated;
    return j.dump() + "\n";
  }
  std::vector<GapRow> rows;
  for (std::size_t i = 0; i < trace.steps; ++i) {
    rows.push_back({i + 1, to_string(trace.c[i]), to_string(trace.e[i]), trace.eps[i].str()});
  }
  return render_gap_rows(rows, format);
}

std::string render(const NaiveGaps& gaps, Format format) {
  std::optional<std::size_t> n0;
  for (const NaiveGapRecord& rec : gaps.records) {
    if (sgn(rec.e) == 0) {
      n0 = rec.n;
      break;
    }
  }
  if (format == Format::kJson) {
    json j;
    j["p"] = to_string(gaps.p);
    j["q"] = to_string(gaps.q);
    json c = json::array();
    json e = json::array();
    for (const NaiveGapRecord& rec : gaps.records) {
      c.push_back(to_string(rec.c));
      e.push_back(to_string(rec.e));
    }
    j["c"] = c;
    j["e"] = e;
    j["n0"] = opt_json(n0);
    j["steps"] = gaps.records.size();
    j["terminated"] = n0.has_value();
    j["trusted_terms"] = gaps.trusted_terms();
    j["truncated"] = gaps.truncated;
    return j.dump() + "\n";
  }
  std::vector<GapRow> rows;
  for (const NaiveGapRecord& rec : gaps.records) {
    rows.push_back({rec.n, to_string(rec.c), to_string(rec.e), rec.eps.str()});
  }
  return render_gap_rows(rows, format);
}

std::string render(std::span<const RecoveryRecord> records, Format format) {
  std::string out;
  switch (format) {
    case Format::kJson:
      for (const RecoveryRecord& rec : records) {
        json j;
        j["n"] = rec.n;
        j["a"] = to_string(rec.a);
        j["x"] = rec.x.str();
        j["delta"] = rec.delta.str();
        j["threshold_met"] = rec.threshold_met;
        out += j.dump() + "\n";
      }
      return out;
    case Format::kCsv:
      out = "n,a,x,delta,threshold_met\n";
      for (const RecoveryRecord& rec : records) {
        out += csv_line({std::to_string(rec.n), to_string(rec.a), rec.x.str(), rec.delta.str(),
                         rec.threshold_met ? "true" : "false"});
      }
      return out;
    case Format::kTable: {
      Table table({"n", "a", "delta", "delta~", "threshold_met"});
      for (const RecoveryRecord& rec : records) {
        table.add({std::to_string(rec.n), to_string(rec.a), rec.delta.str(), rec.delta.decimal(12),
                   rec.threshold_met ? "yes" : "no"});
      }
      return table.str();
    }
  }
  return out;
}

std::string render_sequence(std::span<const Integer> terms, Format format) {
  std::string out;
  switch (format) {
    case Format::kJson:
      for (std::size_t i = 0; i < terms.size(); ++i) {
        json j;
        j["n"] = i + 1;
        j["value"] = to_string(terms[i]);
        out += j.dump() + "\n";
      }
      return out;
    case Format::kCsv:
      out = "n,value\n";
      for (std::size_t i = 0; i < terms.size(); ++i) {
        out += csv_line({std::to_string(i + 1), to_string(terms[i])});
      }
      return out;
    case Format::kTable: {
      Table table({"n", "value"});
      for (std::size_t i = 0; i < terms.size(); ++i) table.add({std::to_string(i + 1), to_string(terms[i])});
      return table.str();
    }
  }
  return out;
}

std::string render(const GrowthEstimate& est, Format format) {
  switch (format) {
    case Format::kJson: {
      json j;
      j["m"] = to_string(est.m);
      j["depth"] = est.depth;
      j["c_hat"] = est.c_hat_str;
      j["residual_bound"] = est.residual_bound;
      j["precision_bound"] = est.precision_bound;
      return j.dump() + "\n";
    }
    case Format::kCsv:
      return "m,depth,c_hat,residual_bound,precision_bound\n" +
             csv_line({to_string(est.m), std::to_string(est.depth), est.c_hat_str,
                       est.residual_bound, est.precision_bound});
    case Format::kTable:
      break;
  }
  return "c(" + to_string(est.m) + ") ~ " + est.c_hat_str + " +/- " + est.residual_bound +
         " (depth " + std::to_string(est.depth) + ", floating-point error <= " +
         est.precision_bound + ")\n";
}

std::string render(const WalkStats& stats, Format format) {
  json j;
  j["trials"] = stats.trials;
  j["steps"] = stats.steps;
  j["c0"] = stats.c0;
  j["samples"] = stats.samples;
  j["mean_log_t"] = opt_json(stats.mean_log_t);
  j["stderr_log_t"] = opt_json(stats.stderr_log_t);
  j["hit_fraction"] = stats.hit_fraction;
  j["mean_hit_time"] = opt_json(stats.mean_hit_time);
  j["seed"] = stats.seed;
  j["generator_id"] = stats.generator_id;
  if (format == Format::kJson) return j.dump() + "\n";
  if (format == Format::kCsv) {
    std::vector<std::string> keys;
    std::vector<std::string> values;
    for (const auto& [k, v] : j.items()) {
      keys.push_back(k);
      values.push_back(v.is_string() ? v.get<std::string>() : (v.is_null() ? "" : v.dump()));
    }
    return csv_line(keys) + csv_line(values);
  }
  Table table({"field", "value"});
  for (const auto& [k, v] : j.items()) {
    if (v.is_number_float()) {
      table.add({k, fmt_double(v.get<double>())});
    } else {
      table.add({k, v.is_string() ? v.get<std::string>() : v.dump()});
    }
  }
  return table.str();
}

std::string render_hits_csv(const WalkStats& stats) {
  std::string out = "trial,hit_step\n";
  for (std::size_t i = 0; i < stats.hit_steps.size(); ++i) {
    out += std::to_string(i) + "," +
           (stats.hit_steps[i] ? std::to_string(*stats.hit_steps[i]) : std::string()) + "\n";
  }
  return out;
}

std::string render_json(const ScanSummary& s) {
  json j;
  j["q_min"] = s.q_min;
  j["q_max"] = s.q_max;
  j["n_max"] = s.n_max;
  j["pairs_total"] = s.pairs_total;
  j["pairs_zero"] = s.pairs_zero;
  j["pairs_maxiter"] = s.pairs_maxiter;
  json hist = json::object();
  for (const auto& [n0, count] : s.n0_histogram) hist[std::to_string(n0)] = count;
  j["n0_histogram"] = hist;
  j["max_c"] = to_string(s.max_c);
  j["wall_seconds"] = s.wall_seconds;
  j["resumed_q_values"] = s.resumed_q_values;
  json leads = json::array();
  for (const auto& [p, q] : s.maxiter_pairs) leads.push_back(to_string(p) + "/" + to_string(q));
  j["maxiter_pairs"] = leads;
  return j.dump() + "\n";
}

std::string render_json(const VerifyReport& report) {
  json j;
  j["pairs_checked"] = report.pairs_checked;
  j["terms_compared"] = report.terms_compared;
  json arr = json::array();
  for (const GapMismatch& m : report.mismatches) {
    arr.push_back({{"p", to_string(m.p)}, {"q", to_string(m.q)}, {"index", m.index}, {"detail", m.detail}});
  }
  j["mismatches"] = arr;
  return j.dump() + "\n";
}

std::string render_mismatches_json(const Integer& p, const Integer& q, std::size_t compared,
                                   const std::vector<GapMismatch>& mismatches) {
  json j;
  j["p"] = to_string(p);
  j["q"] = to_string(q);
  j["compared"] = compared;
  json arr = json::array();
  for (const GapMismatch& m : mismatches) arr.push_back({{"index", m.index}, {"detail", m.detail}});
  j["mismatches"] = arr;
  return j.dump() + "\n";
}

}  // namespace egypt
