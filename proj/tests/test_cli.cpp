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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI; stderr is discarded unless merged into the output.
Run cli(const std::string& args, const std::string& env = "", bool merge_stderr = false) {
  const std::string cmd =
      env + " '" EGYPT_CLI_PATH "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run run;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) run.out.append(buf.data(), n);
  const int status = pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("expand prints JSON lines") {
  const Run r = cli("expand --r 11/29 --kind pseudo --terms 6 --format json");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::vector<json> rows;
  while (std::getline(in, line)) rows.push_back(json::parse(line));
  REQUIRE(rows.size() == 6);
  CHECK(rows[0]["a"] == "4");
  CHECK(rows[0]["eps"] == "-4/11");
  CHECK(rows[4]["e"] == "0");
  CHECK(rows[5]["a"] == "114154191699913");
}

TEST_CASE("expand variants") {
  CHECK(cli("expand --r 3/7 --kind odd --terms 10 --format csv").out.find("\n3,231,") != std::string::npos);
  const Run capped = cli("expand --r 11/29 --kind pseudo --terms 6 --format json", "EGYPT_DIGIT_CAP=5");
  REQUIRE(capped.code == 0);
  CHECK(capped.out.find("\"d\":null") != std::string::npos);
  const Run irr = cli("expand --r '(5-1 sqrt 5)/2' --kind pseudo --terms 3 --format table");
  CHECK(irr.code == 0);
  CHECK(irr.out.find("sqrt 5") != std::string::npos);
  CHECK(cli("expand --r '(5-1 sqrt 5)/2' --kind odd --terms 3").code == 1);
  CHECK(cli("expand --r 0 --kind greedy --terms 3").code == 1);
  CHECK(cli("expand --r 1/0 --kind greedy --terms 3").code == 1);
  CHECK(cli("expand --r 1/2 --kind bogus --terms 3").code == 2);
  CHECK(cli("expand --r 1/2").code == 2);
  CHECK(cli("").code == 2);
}

TEST_CASE("warnings and --quiet") {
  const Run loud = cli("expand --r 1/2 --kind odd --terms 3 --format csv", "", true);
  CHECK(loud.code == 0);
  CHECK(loud.out.find("NONTERMINATED") != std::string::npos);
  const Run quiet = cli("--quiet expand --r 1/2 --kind odd --terms 3 --format csv", "", true);
  CHECK(quiet.out.find("NONTERMINATED") == std::string::npos);
  CHECK(cli("gaps --r 11/29 --terms 2 --method fast", "", true).out.find("NMaxExceeded") != std::string::npos);
  CHECK(cli("expand --r 1/2 --kind odd --terms 3 --bogus").code == 2);
}

TEST_CASE("gaps subcommand") {
  const Run fast = cli("gaps --r 11/29 --terms 50 --method fast --format json");
  REQUIRE(fast.code == 0);
  const json j = json::parse(fast.out);
  CHECK(j["n0"] == 5);
  CHECK(j["e"] == json::array({"-4", "-4", "-1", "4", "0"}));
  CHECK(cli("gaps --r 11/29 --terms 20 --method both --format json").code == 0);
  CHECK(cli("gaps --r 22/58 --terms 20 --method fast").code == 1);
  CHECK(cli("gaps --r 11/29 --terms 3 --method naive --format csv").out ==
        "n,c,e,eps\n1,11,-4,-4/11\n2,15,-4,-4/15\n3,19,-1,-1/19\n");
}

TEST_CASE("recover and seq subcommands") {
  const Run r = cli("recover --sum '(5-1 sqrt 5)/2' --beta 1/3 --terms 4 --format json");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> a;
  while (std::getline(in, line)) a.push_back(json::parse(line)["a"]);
  CHECK(a == std::vector<std::string>{"1", "3", "21", "987"});
  CHECK(cli("recover --sum 1/2 --beta 0 --terms 3").code == 1);
  CHECK(cli("recover --sum 1 --beta -1 --terms 3").code == 1);

  CHECK(cli("seq sylvester --m 4 --terms 3 --format csv").out == "n,value\n1,5\n2,21\n3,421\n");
  CHECK(cli("seq fib2 --terms 3 --format csv").out == "n,value\n1,1\n2,3\n3,21\n");
  CHECK(cli("seq fib2 --terms 25").code == 1);
  CHECK(cli("seq growth --m 1 --depth 10").out.rfind("c(1) ~ 1.2640847353", 0) == 0);
  CHECK(cli("seq growth --m 1 --depth 30").code == 1);
}

TEST_CASE("scan subcommand is deterministic and resumable") {
  const fs::path dir = fs::temp_directory_path() / "egypt_cli_scan";
  fs::create_directories(dir);
  const std::string a = (dir / "a.csv").string();
  const std::string b = (dir / "b.csv").string();
  const Run one = cli("scan --qmax 60 --out " + a + " --jobs 1");
  REQUIRE(one.code == 0);
  const json summary = json::parse(one.out);
  CHECK(summary["pairs_maxiter"] == 0);
  CHECK(cli("scan --qmax 60 --out " + b + " --jobs 3").code == 0);
  const std::string full = slurp(a);
  CHECK(full == slurp(b));

  std::ofstream(b, std::ios::trunc) << full.substr(0, full.size() / 3);
  CHECK(cli("scan --qmax 60 --out " + b + " --resume --jobs 2").code == 0);
  CHECK(slurp(b) == full);

  std::ofstream(b, std::ios::trunc) << "garbage\n";
  CHECK(cli("scan --qmax 60 --out " + b + " --resume").code == 1);
  CHECK(cli("scan --qmax 5 --maxiter 1 --out " + b).code == 0);
  fs::remove_all(dir);
}

TEST_CASE("walk subcommand") {
  const std::string args = "walk --c0 100 --steps 200 --trials 300 --seed 11 --format json";
  const Run one = cli(args + " --threads 1");
  const Run two = cli(args + " --threads 2");
  REQUIRE(one.code == 0);
  CHECK(one.out == two.out);
  const json j = json::parse(one.out);
  CHECK(j["seed"] == 11);
  CHECK(j["generator_id"] == "splitmix64/trial-keyed/v1");
  CHECK(cli("walk --c0 0.5 --steps 2 --trials 2 --seed 1").code == 2);
}
