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

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "cumlift/errors.hpp"
#include "cumlift/instance.hpp"
#include "doctest.h"

using namespace cumlift;

namespace {

std::string Fixture(const std::string& name) {
  std::ifstream in(std::string(CUMLIFT_FIXTURE_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

SchedulingInstance RandomInstance(std::mt19937_64& rng) {
  SchedulingInstance x;
  x.name = "random";
  x.kind = rng() % 2 ? InstanceKind::kRcpsp : InstanceKind::kRcpspMax;
  if (rng() % 2) x.horizon = static_cast<Value>(rng() % 100);
  const int m = static_cast<int>(rng() % 4);
  const int n = static_cast<int>(rng() % 8);
  for (int r = 0; r < m; ++r) x.resources.push_back({static_cast<Value>(rng() % 20)});
  for (int i = 0; i < n; ++i) {
    Task t;
    t.duration = static_cast<Value>(rng() % 10);
    for (int r = 0; r < m; ++r) t.demands.push_back(static_cast<Value>(rng() % 20));
    x.tasks.push_back(t);
  }
  for (int k = 0; n > 1 && k < n; ++k) {
    const int from = static_cast<int>(rng() % n);
    const int to = (from + 1 + static_cast<int>(rng() % (n - 1))) % n;
    const Value offset = x.kind == InstanceKind::kRcpsp ? x.tasks[from].duration : static_cast<Value>(rng() % 11) - 5;
    x.precedences.push_back({from, to, offset});
  }
  return x;
}

}  // namespace

TEST_SUITE_BEGIN("instance-model");

TEST_CASE("PSPLIB fixture keeps dummy tasks") {
  const auto x = ParseInstance(Fixture("example1.sm"), InstanceFormat::kPsplibSm);
  CHECK(x.kind == InstanceKind::kRcpsp);
  REQUIRE(x.num_tasks() == 6);
  REQUIRE(x.num_resources() == 1);
  CHECK(x.resources[0].capacity == 7);
  CHECK(x.horizon == 5);
  const std::vector<Value> durations{0, 1, 1, 1, 2, 0};
  const std::vector<Value> demands{0, 5, 3, 2, 4, 0};
  for (int i = 0; i < 6; ++i) {
    CHECK(x.tasks[i].duration == durations[i]);
    CHECK(x.tasks[i].demands == std::vector<Value>{demands[i]});
  }
  CHECK(x.precedences.size() == 8);
  for (const auto& arc : x.precedences) CHECK(arc.offset == x.tasks[arc.from].duration);
  CHECK(x.precedences.front() == PrecedenceArc{0, 1, 0});
  CHECK(x.precedences.back() == PrecedenceArc{4, 5, 2});
}

TEST_CASE("Patterson fixture describes the same instance") {
  auto sm = ParseInstance(Fixture("example1.sm"), InstanceFormat::kPsplibSm);
  const auto rcp = ParseInstance(Fixture("example1.rcp"), InstanceFormat::kPattersonRcp);
  sm.horizon.reset();
  sm.name = rcp.name;
  CHECK(rcp == sm);
}

TEST_CASE("minimal canonical JSON") {
  const auto x = ParseInstance(
      R"({"tasks":[{"duration":0,"demands":[0]}],"resources":[{"capacity":1}],"precedences":[],"kind":"RCPSP"})",
      InstanceFormat::kCanonicalJson);
  CHECK(x.num_tasks() == 1);
  CHECK(x.num_resources() == 1);
  CHECK(x.kind == InstanceKind::kRcpsp);
  CHECK_FALSE(x.horizon.has_value());
}

TEST_CASE("SCH fixture keeps negative lags") {
  const auto x = ParseInstance(Fixture("arc.sch"), InstanceFormat::kProgenMaxSch);
  CHECK(x.kind == InstanceKind::kRcpspMax);
  CHECK(x.num_tasks() == 4);
  REQUIRE(x.precedences.size() == 1);
  CHECK(x.precedences[0] == PrecedenceArc{0, 1, -2});
  CHECK(x.tasks[1].duration == 3);
  CHECK(x.tasks[1].demands == std::vector<Value>{2});
}

TEST_CASE("parse errors carry positions") {
  std::string text = Fixture("example1.sm");
  SUBCASE("non-integer field") {
    text.replace(text.find("  4      1     1       2"), 24, "  4      1     x       2");
    try {
      ParseInstance(text, InstanceFormat::kPsplibSm);
      FAIL("expected MalformedInput");
    } catch (const MalformedInput& e) {
      CHECK(e.line() == 32);
    }
  }
  SUBCASE("declared job count disagrees") {
    text.replace(text.find("):  6"), 5, "):  7");
    CHECK_THROWS_AS(ParseInstance(text, InstanceFormat::kPsplibSm), InconsistentCounts);
  }
  SUBCASE("negative duration") {
    text.replace(text.find("  5      1     2       4"), 24, "  5      1    -2       4");
    CHECK_THROWS_AS(ParseInstance(text, InstanceFormat::kPsplibSm), NegativeValue);
  }
  SUBCASE("multi-mode jobs are rejected") {
    text.replace(text.find("   6        1          0"), 24, "   6        2          0");
    CHECK_THROWS_AS(ParseInstance(text, InstanceFormat::kPsplibSm), MalformedInput);
  }
}

TEST_CASE("unknown trailing PSPLIB content is ignored with a warning") {
  std::string text = Fixture("example1.sm") + "EXTRA SECTION:\n  1 2 3\n";
  std::vector<std::string> warnings;
  const auto x = ParseInstance(text, InstanceFormat::kPsplibSm, &warnings);
  CHECK(x.num_tasks() == 6);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("EXTRA SECTION") != std::string::npos);
}

TEST_CASE("JSON errors") {
  CHECK_THROWS_AS(ParseInstance("{", InstanceFormat::kCanonicalJson), MalformedInput);
  CHECK_THROWS_AS(ParseInstance(R"({"kind":"RCPSP","tasks":[{"duration":-1,"demands":[]}],"resources":[],"precedences":[]})",
                                InstanceFormat::kCanonicalJson),
                  NegativeValue);
  CHECK_THROWS_AS(ParseInstance(R"({"kind":"RCPSP","tasks":[{"duration":1,"demands":[1,2]}],"resources":[{"capacity":3}],"precedences":[]})",
                                InstanceFormat::kCanonicalJson),
                  InconsistentCounts);
  CHECK_THROWS_AS(ParseInstance(R"({"kind":"RCPSP","tasks":[{"duration":1.5,"demands":[]}],"resources":[],"precedences":[]})",
                                InstanceFormat::kCanonicalJson),
                  MalformedInput);
  // Plain RCPSP arcs must carry the source duration.
  CHECK_THROWS_AS(ParseInstance(R"({"kind":"RCPSP","tasks":[{"duration":2,"demands":[]},{"duration":1,"demands":[]}],
                                   "resources":[],"precedences":[{"from":0,"to":1,"offset":1}]})",
                                InstanceFormat::kCanonicalJson),
                  MalformedInput);
}

TEST_CASE("canonical encoding") {
  const auto one = ParseInstance(
      R"({"tasks":[{"duration":0,"demands":[0]}],"resources":[{"capacity":1}],"precedences":[],"kind":"RCPSP"})",
      InstanceFormat::kCanonicalJson);
  CHECK(EncodeCanonical(one).find("\"kind\":\"RCPSP\"") != std::string::npos);

  auto sm = ParseInstance(Fixture("example1.sm"), InstanceFormat::kPsplibSm);
  CHECK(ParseInstance(EncodeCanonical(sm), InstanceFormat::kCanonicalJson) == sm);

  const auto sch = ParseInstance(Fixture("arc.sch"), InstanceFormat::kProgenMaxSch);
  const auto back = ParseInstance(EncodeCanonical(sch), InstanceFormat::kCanonicalJson);
  CHECK(back == sch);
  CHECK(back.precedences[0].offset == -2);

  // The bundled JSON fixture is in canonical form already.
  auto text = Fixture("example1.json");
  while (!text.empty() && text.back() == '\n') text.pop_back();
  CHECK(EncodeCanonical(ParseInstance(text, InstanceFormat::kCanonicalJson)) == text);
}

TEST_CASE("property: canonical JSON round-trips") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = RandomInstance(rng);
    const auto text = EncodeCanonical(x);
    const auto y = ParseInstance(text, InstanceFormat::kCanonicalJson);
    REQUIRE(y == x);
    REQUIRE(EncodeCanonical(y) == text);
  }
}

TEST_CASE("demand system of the fixture") {
  const auto x = ParseInstance(Fixture("example1.sm"), InstanceFormat::kPsplibSm);
  const auto s = ToDemandSystem(x);
  CHECK(s.rows() == 1);
  CHECK(s.cols() == 4);
  CHECK(std::vector<Value>(s.row(0).begin(), s.row(0).end()) == std::vector<Value>{5, 3, 2, 4});
  CHECK(s.rhs() == std::vector<Value>{7});
  CHECK(s.durations() == std::vector<Value>{1, 1, 1, 2});
  CHECK(s.task_map() == std::vector<TaskId>{1, 2, 3, 4});
}

TEST_CASE("demand system edge cases") {
  SchedulingInstance x;
  x.resources = {{7}};
  x.tasks = {{3, {0}}, {2, {0}}};
  CHECK(ToDemandSystem(x).cols() == 0);

  x.tasks.push_back({1, {9}});
  CHECK_THROWS_AS(ToDemandSystem(x), InfeasibleTask);

  // Overloaded but zero-duration tasks never occupy the resource.
  x.tasks.back().duration = 0;
  CHECK(ToDemandSystem(x).cols() == 0);
}

TEST_CASE("property: projection is injective and zero-duration tasks do not matter") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto x = RandomInstance(rng);
    for (auto& t : x.tasks) {
      for (std::size_t r = 0; r < t.demands.size(); ++r) t.demands[r] = std::min(t.demands[r], x.resources[r].capacity);
    }
    const auto s = ToDemandSystem(x);
    std::set<TaskId> seen(s.task_map().begin(), s.task_map().end());
    CHECK(seen.size() == s.task_map().size());
    for (Column c = 0; c < s.cols(); ++c) {
      const Task& t = x.tasks[s.task_map()[c]];
      CHECK(t.duration == s.duration(c));
      for (int r = 0; r < s.rows(); ++r) CHECK(t.demands[r] == s.at(r, c));
    }

    auto y = x;
    Task dummy;
    dummy.duration = 0;
    dummy.demands.assign(x.resources.size(), 1);
    y.tasks.insert(y.tasks.begin(), dummy);
    for (auto& arc : y.precedences) {
      ++arc.from;
      ++arc.to;
    }
    const auto t = ToDemandSystem(y);
    CHECK(t.rows() == s.rows());
    CHECK(t.cols() == s.cols());
    CHECK(t.rhs() == s.rhs());
    CHECK(t.durations() == s.durations());
    for (int r = 0; r < s.rows(); ++r) {
      CHECK(std::equal(t.row(r).begin(), t.row(r).end(), s.row(r).begin()));
    }
  }
}

TEST_SUITE_END();
