/* Copyright (C) 2026 The permpoly authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(PERMPOLY_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/permpoly_test_" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("field-info") {
  const auto r = run_cli("field-info --q 8 --m 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("|F|=512") != std::string::npos);
  CHECK(r.output.find("[1,1,0,1]") != std::string::npos);
}

TEST_CASE("verify: worked Dickson-style instance") {
  const auto path = write_temp("ex21.json", R"({
    "construction": "thm21",
    "field": {"p": 2, "n": 3, "m": 3},
    "B": "tr",
    "terms": [
      {"L": [[0, 4]], "gamma": 0, "h": "1"},
      {"L": [[1, 1]], "gamma": 0, "h": [0, 2, 0, 1]}
    ]
  })");
  const auto r = run_cli("verify --instance " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("AGREEMENT") != std::string::npos);
  CHECK(r.output.find("permutation") != std::string::npos);
}

TEST_CASE("verify: non-permutation exits 1 with agreement") {
  const auto path = write_temp("h0.json", R"({
    "construction": "thm31",
    "field": {"p": 5, "n": 1, "m": 2},
    "j": 1,
    "h": "0,1"
  })");
  const auto r = run_cli("verify --instance " + path);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("AGREEMENT") != std::string::npos);
  CHECK(r.output.find("not a permutation") != std::string::npos);
}

TEST_CASE("verify: json format") {
  const auto path = write_temp("json_fmt.json", R"({
    "construction": "thm31",
    "field": {"p": 5, "n": 1, "m": 2},
    "j": 1,
    "h": "2,1,1"
  })");
  const auto r = run_cli("verify --instance " + path + " --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"agreement\": true") != std::string::npos);
  CHECK(r.output.find("\"is_permutation\": true") != std::string::npos);
}

TEST_CASE("verify: malformed input exits 64") {
  const auto path = write_temp("broken.json", "{ not json");
  CHECK(run_cli("verify --instance " + path).exit_code == 64);

  const auto path2 = write_temp("badcoeff.json", R"({
    "construction": "thm31",
    "field": {"p": 5, "n": 1, "m": 2},
    "j": 1,
    "h": "2,x,1"
  })");
  CHECK(run_cli("verify --instance " + path2).exit_code == 64);

  CHECK(run_cli("verify").exit_code == 64);          // missing --instance
  CHECK(run_cli("frobnicate").exit_code == 64);      // unknown subcommand
}

TEST_CASE("verify: hypothesis violations exit 65 with the clause named") {
  // h(x) = y*x is not F_q-valued on the trace image
  const auto path = write_temp("hyp.json", R"({
    "construction": "thm21",
    "field": {"p": 2, "n": 2, "m": 2},
    "B": "tr",
    "terms": [{"L": "x", "gamma": 0, "h": [0, 4]}]
  })");
  const auto r = run_cli("verify --instance " + path);
  CHECK(r.exit_code == 65);
  CHECK(r.output.find("h_values_in_fq") != std::string::npos);

  // gcd violation in a symmetric-function instance
  const auto path2 = write_temp("gcd.json", R"({
    "construction": "thm32",
    "field": {"p": 2, "n": 2, "m": 2},
    "j": 3,
    "h": "1"
  })");
  const auto r2 = run_cli("verify --instance " + path2);
  CHECK(r2.exit_code == 65);
}

TEST_CASE("audit commands") {
  const auto r = run_cli("audit thm31 --q 5 --m 2 --j 1 --max-deg 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("125 total, 125 checked") != std::string::npos);
  CHECK(r.output.find("disagreements: 0") != std::string::npos);

  const auto r2 = run_cli("audit thm32 --q 4 --m 2 --j 7 --max-deg 2");
  CHECK(r2.exit_code == 0);
  CHECK(r2.output.find("64 total") != std::string::npos);

  const auto r3 = run_cli("audit thm21 --preset example21 --m 3");
  CHECK(r3.exit_code == 0);
  CHECK(r3.output.find("7 total, 7 checked") != std::string::npos);

  const auto r4 = run_cli("audit cor23 --q 4 --m 2 --count 50 --seed 7");
  CHECK(r4.exit_code == 0);
  CHECK(r4.output.find("disagreements: 0") != std::string::npos);

  // gcd violation rejected up front
  CHECK(run_cli("audit thm32 --q 4 --m 2 --j 3").exit_code == 65);
}

TEST_CASE("search emits the expected polynomial") {
  const auto r = run_cli("search thm31 --q 5 --m 2 --j 1 --max-deg 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("2,1,1") != std::string::npos);
  CHECK(r.output.find("0,") == std::string::npos);  // no h with h(0) = 0
}

TEST_CASE("export writes the identity table for x*h with h = 1") {
  const auto path = write_temp("identity.json", R"({
    "construction": "thm31",
    "field": {"p": 5, "n": 1, "m": 2},
    "j": 1,
    "h": "1"
  })");
  const auto out = "/tmp/permpoly_test_identity.csv";
  const auto r = run_cli("export --instance " + path + " --out " + out);
  CHECK(r.exit_code == 0);
  std::ifstream csv(out);
  std::string line;
  std::getline(csv, line);
  CHECK(line == "input_code,output_code");
  for (int i = 0; i < 25; ++i) {
    std::getline(csv, line);
    CHECK(line == std::to_string(i) + "," + std::to_string(i));
  }
}

TEST_CASE("translators of the trace") {
  const auto r = run_cli("translators --f tr --q 4 --m 2");
  CHECK(r.exit_code == 0);
  // 15 certificates plus the header line
  std::size_t lines = 0;
  for (char c : r.output)
    if (c == '\n') ++lines;
  CHECK(lines == 16);
  CHECK(r.output.find("alpha,a") != std::string::npos);
  CHECK(r.output.find("4,1") != std::string::npos);  // Tr(y) = 1
}

TEST_CASE("deterministic output for fixed seed") {
  const auto a = run_cli("audit cor23 --q 4 --m 2 --count 30 --seed 5 --format json");
  const auto b = run_cli("audit cor23 --q 4 --m 2 --count 30 --seed 5 --format json");
  // strip the timing line before comparing
  const auto strip = [](std::string s) {
    const auto pos = s.find("elapsed_ms");
    return pos == std::string::npos ? s : s.substr(0, pos);
  };
  CHECK(strip(a.output) == strip(b.output));
}
