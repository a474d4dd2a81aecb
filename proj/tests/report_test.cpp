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
#include <sstream>

#include "cumlift/errors.hpp"
#include "cumlift/report.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

using namespace cumlift;

namespace {

SchedulingInstance FixtureInstance() {
  std::ifstream in(std::string(CUMLIFT_FIXTURE_DIR) + "/example1.json", std::ios::binary);
  REQUIRE(in);
  std::ostringstream text;
  text << in.rdbuf();
  return ParseInstance(text.str(), InstanceFormat::kCanonicalJson);
}

SchedulingInstance Chain(std::vector<Value> durations) {
  SchedulingInstance x;
  x.resources = {{1}};
  for (std::size_t i = 0; i < durations.size(); ++i) {
    x.tasks.push_back({durations[i], {1}});
    if (i > 0) x.precedences.push_back({static_cast<TaskId>(i - 1), static_cast<TaskId>(i), durations[i - 1]});
  }
  return x;
}

}  // namespace

TEST_SUITE_BEGIN("cli-report");

TEST_CASE("search-less bound prefers inferred constraints on ties") {
  const auto s = DemandSystem::FromRows({{5, 3, 2, 4}}, {7}, {1, 1, 1, 2});
  const std::vector<LiftedInequality> inferred{{{1, 1, 1, 1}, 2}};
  const auto lb = ComputeSearchlessLowerBound(s, inferred);
  CHECK(lb.bound == 3);
  CHECK(lb.certificate == Certificate{Certificate::Kind::kInferred, 0});

  const auto rows_only = ComputeSearchlessLowerBound(s, {});
  CHECK(rows_only.bound == 3);
  CHECK(rows_only.certificate == Certificate{Certificate::Kind::kResource, 0});

  const auto empty = ComputeSearchlessLowerBound(DemandSystem::FromRows({}, {}, {}), {});
  CHECK(empty.bound == 0);
  CHECK(empty.certificate.kind == Certificate::Kind::kNone);

  const std::vector<LiftedInequality> two{{{1, 0, 0, 1}, 1}, {{1, 1, 1, 1}, 2}};
  const auto better = ComputeSearchlessLowerBound(s, two);
  CHECK(better.bound == 3);
  CHECK(better.certificate.index == 0);
}

TEST_CASE("precedence path bound") {
  CHECK(PrecedencePathLowerBound(Chain({2, 3})) == 5);

  SchedulingInstance none;
  none.tasks = {{0, {}}, {0, {}}};
  CHECK(PrecedencePathLowerBound(none) == 0);

  SchedulingInstance cycle;
  cycle.kind = InstanceKind::kRcpspMax;
  cycle.tasks = {{1, {}}, {1, {}}};
  cycle.precedences = {{0, 1, 4}, {1, 0, -1}};
  CHECK_THROWS_AS(PrecedencePathLowerBound(cycle), PositiveCycle);

  cycle.precedences = {{0, 1, 4}, {1, 0, -4}};
  CHECK(PrecedencePathLowerBound(cycle) == 5);
}

TEST_CASE("fixture report") {
  const auto report = RunPipeline(FixtureInstance(), LiftingConfig{});
  CHECK(report.instance == "example1");
  CHECK(report.tasks == 6);
  CHECK(report.columns == 4);
  CHECK(report.searchless_lb == 3);
  CHECK(report.certificate == Certificate{Certificate::Kind::kInferred, 0});
  CHECK(report.precedence_lb == 2);
  REQUIRE_FALSE(report.constraints.empty());
  bool example = false;
  for (const auto& c : report.constraints) {
    CHECK(c.verification == Verification::kVerified);
    if (c.capacity == 2 && c.usages == std::vector<std::pair<TaskId, Value>>{{1, 1}, {2, 1}, {3, 1}, {4, 1}}) {
      example = true;
      CHECK(c.capacity_bound == Rational(5, 2));
      CHECK(c.capacity_lb == 3);
    }
  }
  CHECK(example);

  const auto json = EmitReport(report, ReportFormat::kJson);
  CHECK(json.find("\"searchless_lb\": 3") != std::string::npos);
  CHECK(ParseReport(json) == report);
  CHECK(EmitReport(ParseReport(json), ReportFormat::kJson) == json);

  const auto text = EmitReport(report, ReportFormat::kText);
  CHECK(text.find("New bound") != std::string::npos);
  CHECK(text.find("Capacity") != std::string::npos);
  CHECK(text.find("Ref. bound") != std::string::npos);
}

TEST_CASE("empty report") {
  InferenceReport report;
  const auto json = EmitReport(report, ReportFormat::kJson);
  const auto doc = nlohmann::json::parse(json);
  CHECK(doc["constraints"].is_array());
  CHECK(doc["constraints"].empty());
  CHECK(ParseReport(json) == report);
  CHECK_THROWS_AS(ParseReport("[]"), MalformedInput);
  CHECK_THROWS_AS(ParseReport("{\"instance\": \"x\"}"), MalformedInput);
}

TEST_CASE("single task") {
  SchedulingInstance x;
  x.name = "one";
  x.resources = {{4}};
  x.tasks = {{3, {2}}};
  const auto report = RunPipeline(x, LiftingConfig{});
  CHECK(report.constraints.empty());
  CHECK(report.searchless_lb == 2);
  CHECK(report.certificate == Certificate{Certificate::Kind::kResource, 0});
}

TEST_CASE("disjunctive-only mode") {
  LiftingConfig config;
  config.max_cover_cardinality = 2;
  const auto report = RunPipeline(FixtureInstance(), config);
  CHECK(report.stats.ternary_covers == 0);
  CHECK(report.stats.long_covers == 0);
  for (const auto& c : report.constraints) {
    CHECK(c.rule == GenerationRule::kBinary);
    CHECK(c.source_cover.size() == 2);
  }
}

TEST_CASE("model fragment") {
  const auto x = FixtureInstance();
  const auto s = ToDemandSystem(x);
  const std::vector<LiftedInequality> inferred{{{1, 1, 1, 1}, 2}, {{1, 0, 0, 1}, 1}};
  const auto text = EmitModelFragment(x, s, inferred);
  CHECK(text ==
        "constraint cumulative(s, d, [0, 1, 1, 1, 1, 0], 2);\n"
        "constraint cumulative(s, d, [0, 1, 0, 0, 1, 0], 1);\n");
  CHECK(EmitModelFragment(x, s, {}).empty());
  CHECK(EmitModelFragment(x, s, std::vector<LiftedInequality>{{{1, 1, 1, 1}, 2}}, "start", "dur")
            .starts_with("constraint cumulative(start, dur, "));
}

TEST_CASE("parallelism graph") {
  const auto x = FixtureInstance();
  const auto dot = ExportParallelismGraph(ToDemandSystem(x));
  for (const char* edge : {"t1 -- t3;", "t2 -- t3;", "t2 -- t4;", "t3 -- t4;"}) {
    CHECK(dot.find(edge) != std::string::npos);
  }
  CHECK(dot.find("t1 -- t2;") == std::string::npos);
  CHECK(dot.find("t1 -- t4;") == std::string::npos);
  CHECK(dot.find("t4 [label=\"4\\nd=2\", duration=2];") != std::string::npos);

  const auto single = ExportParallelismGraph(DemandSystem::FromRows({{1}}, {1}, {3}));
  CHECK(single.find("t0 [") != std::string::npos);
  CHECK(single.find("--") == std::string::npos);
  CHECK(ExportParallelismGraph(DemandSystem::FromRows({{1, 1}}, {1}, {1, 1})).find("--") == std::string::npos);
  // An edge needs room on every resource.
  CHECK(ExportParallelismGraph(DemandSystem::FromRows({{1, 1}, {2, 2}}, {2, 3}, {1, 1})).find("--") ==
        std::string::npos);
}

TEST_CASE("property: certified bounds and round-trips on random instances") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const int m = 1 + static_cast<int>(rng() % 3);
    const auto s = testing::RandomSystem(rng, n, m, 12, 6);
    SchedulingInstance x;
    x.name = "r#" + std::to_string(trial);
    for (int r = 0; r < m; ++r) x.resources.push_back({s.rhs(r)});
    for (int c = 0; c < n; ++c) {
      Task t{s.duration(c), {}};
      for (int r = 0; r < m; ++r) t.demands.push_back(s.at(r, c));
      x.tasks.push_back(t);
    }
    const auto report = RunPipeline(x, LiftingConfig{});
    const auto json = EmitReport(report, ReportFormat::kJson);
    REQUIRE(ParseReport(json) == report);

    const auto system = ToDemandSystem(x);
    const auto inequalities = ToInequalities(report, system);
    for (std::size_t k = 0; k < inequalities.size(); ++k) {
      CHECK(CapacityLowerBound(inequalities[k], system.durations()) == report.constraints[k].capacity_lb);
    }
    const auto lb = ComputeSearchlessLowerBound(system, inequalities);
    CHECK(lb.bound == report.searchless_lb);
    if (report.certificate.kind == Certificate::Kind::kInferred) {
      CHECK(report.constraints[report.certificate.index].capacity_lb == report.searchless_lb);
    } else if (report.certificate.kind == Certificate::Kind::kResource) {
      CHECK(CapacityLowerBound(LiftedInequality::FromRow(system, report.certificate.index), system.durations()) ==
            report.searchless_lb);
    }
  }
}

TEST_CASE("property: fragments never cut off a feasible schedule") {
  std::mt19937_64 rng(43);
  int schedules = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto s = testing::RandomSystem(rng, n, 1, 6, 3);
    SchedulingInstance x;
    x.resources = {{s.rhs(0)}};
    x.tasks.push_back({0, {0}});
    for (int c = 0; c < n; ++c) x.tasks.push_back({s.duration(c), {s.at(0, c)}});
    const auto report = RunPipeline(x, LiftingConfig{});
    const auto system = ToDemandSystem(x);
    const auto inequalities = ToInequalities(report, system);
    const auto fragment = EmitModelFragment(x, system, inequalities);
    std::vector<std::vector<Value>> usages;
    std::vector<Value> capacities;
    std::istringstream lines(fragment);
    for (std::string line; std::getline(lines, line);) {
      const auto open = line.find('[');
      const auto close = line.find(']');
      std::vector<Value> usage;
      std::istringstream items(line.substr(open + 1, close - open - 1));
      for (std::string item; std::getline(items, item, ',');) usage.push_back(std::stoll(item));
      REQUIRE(usage.size() == x.tasks.size());
      usages.push_back(usage);
      capacities.push_back(std::stoll(line.substr(close + 2)));
    }
    REQUIRE(usages.size() == report.constraints.size());
    std::vector<Value> durations;
    std::vector<Value> demand;
    for (const Task& t : x.tasks) {
      durations.push_back(t.duration);
      demand.push_back(t.demands[0]);
    }
    const Value horizon = 6;
    testing::ForEachSchedule(durations, horizon, [&](const std::vector<Value>& starts) {
      if (starts[0] != 0) return;
      if (!testing::ProfileWithin(starts, durations, demand, x.resources[0].capacity, horizon)) return;
      ++schedules;
      for (std::size_t k = 0; k < usages.size(); ++k) {
        CHECK(testing::ProfileWithin(starts, durations, usages[k], capacities[k], horizon));
      }
    });
  }
  CHECK(schedules > 0);
}

TEST_SUITE_END();
