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

#include <algorithm>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "core/error.hpp"
#include "core/render.hpp"

using namespace egypt;
using json = nlohmann::ordered_json;

namespace {

Expansion eleven_29() {
  ExpandOptions opt;
  opt.max_terms = 6;
  return expand(Value(Rational(Integer(11), Integer(29))), ExpansionKind::kPseudoGreedy, opt);
}

}  // namespace

TEST_CASE("expansion renders as JSON lines") {
  std::istringstream in(render(eleven_29(), Format::kJson));
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    const json j = json::parse(line);
    ++n;
    CHECK(j["n"] == n);
    if (n == 4) {
      CHECK(j["a"] == "2924");
      CHECK(j["x"] == "5/14616");
      CHECK(j["c"] == "20");
      CHECK(j["d"] == "58464");
      CHECK(j["e"] == "4");
      CHECK(j["eps"] == "1/5");
      CHECK(j["implied"] == false);
    }
    if (n == 6) CHECK(j["implied"] == true);
  }
  CHECK(n == 6);
}

TEST_CASE("csv and table layouts") {
  const std::string csv = render(eleven_29(), Format::kCsv);
  CHECK(csv.rfind("n,a,x,c,d,e,eps\n1,4,11/29,11,29,-4,-4/11\n", 0) == 0);
  const std::string table = render(eleven_29(), Format::kTable);
  CHECK(table.find("6*") != std::string::npos);

  const GapTrace t = gap_sequence_fast(Integer(11), Integer(29), 20);
  CHECK(render(t, Format::kCsv) == "n,c,e,eps\n1,11,-4,-4/11\n2,15,-4,-4/15\n3,19,-1,-1/19\n4,20,4,1/5\n5,16,0,0\n");
  const json j = json::parse(render(t, Format::kJson));
  CHECK(j["c"].size() == 6);
  CHECK(j["n0"] == 5);
  CHECK(j["terminated"] == true);

  const json naive = json::parse(render(gap_sequence_naive(Integer(11), Integer(29), 6), Format::kJson));
  CHECK(naive["trusted_terms"] == 6);
  CHECK(naive["n0"] == 5);

  const std::vector<Integer> s = {Integer(2), Integer(3), Integer(7)};
  CHECK(render_sequence(s, Format::kCsv) == "n,value\n1,2\n2,3\n3,7\n");
  CHECK(render_sequence(s, Format::kJson) == "{\"n\":1,\"value\":\"2\"}\n{\"n\":2,\"value\":\"3\"}\n{\"n\":3,\"value\":\"7\"}\n");
}

TEST_CASE("growth and walk summaries") {
  const std::string line = render(growth_constant(Integer(1), 8), Format::kTable);
  CHECK(line.rfind("c(1) ~ 1.264084735305", 0) == 0);
  const json g = json::parse(render(growth_constant(Integer(2), 6), Format::kJson));
  CHECK(g["m"] == "2");
  CHECK(g["depth"] == 6);

  WalkParams p;
  p.c0 = 10;
  p.steps = 100;
  p.trials = 100;
  p.threads = 1;
  p.record_hits = true;
  const WalkStats st = simulate_walk(p);
  const json w = json::parse(render(st, Format::kJson));
  CHECK(w["generator_id"] == std::string(kGeneratorId));
  CHECK(w["trials"] == 100);
  const std::string hits = render_hits_csv(st);
  CHECK(hits.rfind("trial,hit_step\n0,", 0) == 0);
  CHECK(std::count(hits.begin(), hits.end(), '\n') == 101);
}

TEST_CASE("format names") {
  CHECK(parse_format("json") == Format::kJson);
  CHECK(parse_format("csv") == Format::kCsv);
  CHECK(parse_format("table") == Format::kTable);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}
