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

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cumlift/covers.hpp"
#include "cumlift/errors.hpp"
#include "cumlift/report.hpp"

namespace cumlift {

bool operator==(const LiftingConfig& x, const LiftingConfig& y) {
  return x.n_cover == y.n_cover && x.n_out == y.n_out && x.max_cover_cardinality == y.max_cover_cardinality &&
         x.bruteforce_verify == y.bruteforce_verify && x.bruteforce_limit == y.bruteforce_limit;
}

namespace {

CoverBatch SeedCovers(const DemandSystem& system, const LiftingConfig& config) {
  const bool binary_only = config.max_cover_cardinality && *config.max_cover_cardinality == 2;
  CoverBatch batch = EnumerateShortCovers(system, {.ternary = !binary_only});
  if (binary_only) return batch;
  batch.Append(EnumerateLongCovers(system));
  if (!config.max_cover_cardinality) return batch;
  CoverBatch bounded;
  for (const Cover& cover : batch.covers()) {
    if (cover.size() <= *config.max_cover_cardinality) bounded.Add(cover);
  }
  return bounded;
}

std::vector<TaskId> ToTasks(std::span<const Column> columns, const DemandSystem& system) {
  std::vector<TaskId> tasks;
  tasks.reserve(columns.size());
  for (Column c : columns) tasks.push_back(system.task_map()[c]);
  return tasks;
}

}  // namespace

InferenceReport RunPipeline(const SchedulingInstance& instance, const LiftingConfig& config) {
  config.Check();
  const DemandSystem system = ToDemandSystem(instance);
  const CoverBatch batch = SeedCovers(system, config);
  const std::vector<Cover> selected =
      SelectTopCovers(batch, system.durations(), static_cast<std::size_t>(config.n_cover));
  InferenceResult inference = InferConstraints(system, selected, config);

  const bool verify = config.bruteforce_verify && system.cols() <= config.bruteforce_limit;
  InferenceReport report;
  report.instance = instance.name;
  report.config = config;
  report.tasks = instance.num_tasks();
  report.columns = system.cols();
  report.resources = instance.num_resources();

  std::vector<LiftedInequality> inequalities;
  for (const InferredConstraint& inferred : inference.constraints) {
    const LiftedInequality& ineq = inferred.inequality;
    if (verify) {
      const ValidityResult check = CheckValidityBruteForce(ineq, system, config.bruteforce_limit);
      if (!check.valid) {
        throw VerificationFailed("inferred inequality from cover of resource " +
                                 std::to_string(inferred.source.source_row) + " is violated by a feasible point");
      }
    }
    ReportConstraint out;
    for (Column c = 0; c < system.cols(); ++c) {
      if (ineq.coeffs[c] > 0) out.usages.emplace_back(system.task_map()[c], ineq.coeffs[c]);
    }
    out.capacity = ineq.rhs;
    out.capacity_bound = inferred.capacity_bound;
    out.capacity_lb = Ceil(inferred.capacity_bound);
    out.source_cover = ToTasks(inferred.source.members, system);
    out.source_resource = inferred.source.source_row;
    out.rule = inferred.source.rule;
    out.infeasible_tasks = ToTasks(inferred.infeasible_columns, system);
    out.verification = verify ? Verification::kVerified : Verification::kUnchecked;
    report.constraints.push_back(std::move(out));
    inequalities.push_back(ineq);
  }

  const SearchlessBound lb = ComputeSearchlessLowerBound(system, inequalities);
  report.searchless_lb = lb.bound;
  report.certificate = lb.certificate;
  report.precedence_lb = PrecedencePathLowerBound(instance);

  report.stats.binary_covers = batch.Count(GenerationRule::kBinary);
  report.stats.ternary_covers = batch.Count(GenerationRule::kTernary);
  report.stats.long_covers = batch.Count(GenerationRule::kLongMax) + batch.Count(GenerationRule::kLongMin);
  report.stats.selected_covers = selected.size();
  report.stats.covers_skipped = inference.stats.covers_skipped;
  report.stats.covers_lifted = inference.stats.covers_lifted;
  report.stats.dominated = inference.stats.dominated;
  report.stats.subproblem_calls = inference.stats.subproblem_calls;
  return report;
}

std::vector<LiftedInequality> ToInequalities(const InferenceReport& report, const DemandSystem& system) {
  std::unordered_map<TaskId, Column> column_of;
  for (Column c = 0; c < system.cols(); ++c) column_of[system.task_map()[c]] = c;
  std::vector<LiftedInequality> out;
  for (const ReportConstraint& constraint : report.constraints) {
    LiftedInequality ineq{std::vector<Value>(system.cols(), 0), constraint.capacity};
    for (auto [task, usage] : constraint.usages) {
      auto it = column_of.find(task);
      if (it == column_of.end()) {
        throw MalformedInput("report mentions task " + std::to_string(task) +
                             ", which has no resource demand or zero duration in this instance");
      }
      ineq.coeffs[it->second] = usage;
    }
    out.push_back(std::move(ineq));
  }
  return out;
}

}  // namespace cumlift
