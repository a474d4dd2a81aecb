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

// Inference reports, makespan lower bounds, and the text artifacts derived
// from them (report JSON/text, MiniZinc fragment, DOT parallelism graph).

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cumlift/instance.hpp"
#include "cumlift/lifting.hpp"
#include "cumlift/polyhedral.hpp"

namespace cumlift {

enum class Verification { kVerified, kUnchecked };

struct ReportConstraint {
  std::vector<std::pair<TaskId, Value>> usages;  // positive usages, ascending task id
  Value capacity = 0;
  Rational capacity_bound;
  Value capacity_lb = 0;
  std::vector<TaskId> source_cover;
  int source_resource = 0;
  GenerationRule rule = GenerationRule::kBinary;
  std::vector<TaskId> infeasible_tasks;
  Verification verification = Verification::kUnchecked;

  bool operator==(const ReportConstraint&) const = default;
};

struct Certificate {
  enum class Kind { kNone, kInferred, kResource };
  Kind kind = Kind::kNone;
  int index = 0;  // into the inferred list or the resource rows

  bool operator==(const Certificate&) const = default;
};

struct ReportStats {
  std::size_t binary_covers = 0;
  std::size_t ternary_covers = 0;
  std::size_t long_covers = 0;
  std::size_t selected_covers = 0;
  std::size_t covers_skipped = 0;
  std::size_t covers_lifted = 0;
  std::size_t dominated = 0;
  std::size_t subproblem_calls = 0;

  bool operator==(const ReportStats&) const = default;
};

struct InferenceReport {
  std::string instance;
  LiftingConfig config;
  int tasks = 0;
  int columns = 0;
  int resources = 0;
  std::vector<ReportConstraint> constraints;
  Value searchless_lb = 0;
  Certificate certificate;
  Value precedence_lb = 0;
  ReportStats stats;

  bool operator==(const InferenceReport&) const = default;
};

bool operator==(const LiftingConfig& x, const LiftingConfig& y);

struct SearchlessBound {
  Value bound = 0;
  Certificate certificate;
};

/// Largest capacity lower bound among `inferred` and the rows of `system`
/// (rows with zero capacity are skipped). Inferred constraints win ties.
SearchlessBound ComputeSearchlessLowerBound(const DemandSystem& system, std::span<const LiftedInequality> inferred);

/// max_i (est_i + d_i) where est are the earliest starts implied by the
/// precedence offsets from time 0. Throws PositiveCycle.
Value PrecedencePathLowerBound(const SchedulingInstance& instance);

/// to_demand_system, cover enumeration and selection, lifting, verification,
/// bounds. Throws VerificationFailed if an output fails the oracle.
InferenceReport RunPipeline(const SchedulingInstance& instance, const LiftingConfig& config);

/// Report constraints back on the columns of `system`.
std::vector<LiftedInequality> ToInequalities(const InferenceReport& report, const DemandSystem& system);

enum class ReportFormat { kJson, kText };

std::string EmitReport(const InferenceReport& report, ReportFormat format);
InferenceReport ParseReport(std::string_view json);

/// One MiniZinc `constraint cumulative(s, d, usages, capacity);` line per
/// inequality, usages in original task order (0 for tasks outside `system`).
std::string EmitModelFragment(const SchedulingInstance& instance, const DemandSystem& system,
                              std::span<const LiftedInequality> inferred, std::string_view starts = "s",
                              std::string_view durations = "d");

/// Undirected DOT graph over the columns of `system`: an edge joins two
/// tasks whose demands fit together on every resource.
std::string ExportParallelismGraph(const DemandSystem& system);

}  // namespace cumlift
