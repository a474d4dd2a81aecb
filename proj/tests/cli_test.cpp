// Copyright 2026 The cumlift Authors
//
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


#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cumlift/cli.hpp"
#include "cumlift/report.hpp"
#include "doctest.h"

using namespace cumlift;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = CliMain(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Fixture(const std::string& name) { return std::string(CUMLIFT_FIXTURE_DIR) + "/" + name; }

fs::path Scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "cumlift_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

std::string ReadText(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

TEST_SUITE_BEGIN("cli-report");

TEST_CASE("infer writes a JSON report") {
  const auto run = Cli({"infer", Fixture("example1.sm"), "--format", "psplib-sm"});
  CHECK(run.code == kExitOk);
  CHECK(run.out.find("\"searchless_lb\": 3") != std::string::npos);
  const auto report = ParseReport(run.out);
  CHECK(report.instance == "example1");
  CHECK(report.precedence_lb == 2);

  const auto again = Cli({"infer", Fixture("example1.sm")});
  CHECK(again.code == kExitOk);
  CHECK(again.out == run.out);

  const auto text = Cli({"infer", Fixture("example1.json"), "--report-format", "text"});
  CHECK(text.code == kExitOk);
  CHECK(text.out.find("New bound") != std::string::npos);
}

TEST_CASE("infer honours its options") {
  const fs::path out = Scratch("report.json");
  const auto run = Cli({"infer", Fixture("example1.rcp"), "--n-out", "1", "--max-cover-card", "2", "--no-verify",
                        "--out", out.string()});
  CHECK(run.code == kExitOk);
  CHECK(run.out.empty());
  const auto report = ParseReport(ReadText(out));
  CHECK(report.constraints.size() == 1);
  CHECK(report.config.n_out == 1);
  CHECK(report.config.max_cover_cardinality == 2);
  CHECK_FALSE(report.config.bruteforce_verify);
  CHECK(report.stats.ternary_covers == 0);
  CHECK(report.constraints[0].verification == Verification::kUnchecked);
}

TEST_CASE("bound, emit and graph") {
  const auto bound = Cli({"bound", Fixture("example1.sm")});
  CHECK(bound.code == kExitOk);
  CHECK(bound.out.starts_with("searchless_lb 3"));
  CHECK(bound.out.find("precedence_lb 2") != std::string::npos);

  const auto sch = Cli({"bound", Fixture("arc.sch")});
  CHECK(sch.code == kExitOk);
  CHECK(sch.out.find("precedence_lb 3") != std::string::npos);

  const auto emit = Cli({"emit", Fixture("example1.sm")});
  CHECK(emit.code == kExitOk);
  CHECK(emit.out.find("constraint cumulative(s, d, [0, 1, 1, 1, 1, 0], 2);") != std::string::npos);

  const auto graph = Cli({"graph", Fixture("example1.sm")});
  CHECK(graph.code == kExitOk);
  CHECK(graph.out.starts_with("graph parallelism {"));
  CHECK(graph.out.find("t2 -- t4;") != std::string::npos);
}

TEST_CASE("check accepts honest reports and rejects tampered ones") {
  const fs::path good = Scratch("good.json");
  REQUIRE(Cli({"infer", Fixture("example1.sm"), "--out", good.string()}).code == kExitOk);
  const auto ok = Cli({"check", Fixture("example1.sm"), good.string()});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("INVALID") == std::string::npos);

  auto report = ParseReport(ReadText(good));
  REQUIRE_FALSE(report.constraints.empty());
  for (auto& c : report.constraints) {
    if (c.capacity == 2) c.capacity = 1;
  }
  const fs::path bad = Scratch("bad.json");
  WriteText(bad, EmitReport(report, ReportFormat::kJson));
  const auto rejected = Cli({"check", Fixture("example1.sm"), bad.string()});
  CHECK(rejected.code == kExitVerificationFailed);
  CHECK(rejected.out.find("INVALID") != std::string::npos);

  report = ParseReport(ReadText(good));
  report.searchless_lb += 1;
  WriteText(bad, EmitReport(report, ReportFormat::kJson));
  CHECK(Cli({"check", Fixture("example1.sm"), bad.string()}).code == kExitVerificationFailed);
}

TEST_CASE("usage errors") {
  const auto unknown = Cli({"infer", Fixture("example1.sm"), "--bogus"});
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(Cli({}).code == kExitUsage);
  CHECK(Cli({"frobnicate"}).code == kExitUsage);
  CHECK(Cli({"infer", Fixture("example1.sm"), "--n-out", "0"}).code == kExitUsage);
  CHECK(Cli({"infer", Fixture("example1.sm"), "--format", "xml"}).code == kExitUsage);
  CHECK(Cli({"infer", Fixture("example1.sm"), "--report-format", "yaml"}).code == kExitUsage);
  CHECK(Cli({"--help"}).code == kExitOk);
}

TEST_CASE("malformed and infeasible inputs") {
  const fs::path garbage = Scratch("garbage.json");
  WriteText(garbage, "{\"tasks\": 3}");
  CHECK(Cli({"infer", garbage.string()}).code == kExitMalformedInput);
  CHECK(Cli({"infer", Scratch("missing.sm").string()}).code == kExitMalformedInput);

  const fs::path heavy = Scratch("heavy.json");
  WriteText(heavy,
            R"({"kind":"RCPSP","tasks":[{"duration":1,"demands":[9]}],"resources":[{"capacity":7}],"precedences":[]})");
  const auto infeasible = Cli({"infer", heavy.string()});
  CHECK(infeasible.code == kExitInfeasible);
  CHECK(infeasible.err.find("infeasible") != std::string::npos);

  const fs::path cycle = Scratch("cycle.json");
  WriteText(cycle, R"({"kind":"RCPSP_MAX","tasks":[{"duration":1,"demands":[1]},{"duration":1,"demands":[1]}],
    "resources":[{"capacity":2}],"precedences":[{"from":0,"to":1,"offset":4},{"from":1,"to":0,"offset":-1}]})");
  CHECK(Cli({"bound", cycle.string()}).code == kExitInfeasible);
}

TEST_CASE("seed fixtures reproduces the bundled files") {
  const fs::path dir = Scratch("seeded");
  const auto run = Cli({"--seed-fixtures", dir.string()});
  CHECK(run.code == kExitOk);
  for (const char* name : {"example1.sm", "example1.rcp", "arc.sch", "example1.json"}) {
    CHECK(ReadText(dir / name) == ReadText(Fixture(name)));
  }
}

TEST_SUITE_END();
