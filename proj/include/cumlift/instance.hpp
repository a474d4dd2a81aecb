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

// Scheduling instances and their projection onto the demand system A x <= b
// over occupancy vectors.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cumlift {

using Value = std::int64_t;
using TaskId = int;
using Column = int;

struct Task {
  Value duration = 0;
  std::vector<Value> demands;  // one entry per resource

  bool operator==(const Task&) const = default;
};

struct Resource {
  Value capacity = 0;

  bool operator==(const Resource&) const = default;
};

/// start(to) - start(from) >= offset.
struct PrecedenceArc {
  TaskId from = 0;
  TaskId to = 0;
  Value offset = 0;

  bool operator==(const PrecedenceArc&) const = default;
};

enum class InstanceKind { kRcpsp, kRcpspMax };

std::string_view ToString(InstanceKind kind);
InstanceKind InstanceKindFromString(std::string_view text);

/// A single-mode scheduling instance. Task ids are positions in `tasks`;
/// dummy source/sink tasks (duration 0) are kept as they appear in the file.
struct SchedulingInstance {
  std::string name;
  InstanceKind kind = InstanceKind::kRcpsp;
  std::optional<Value> horizon;
  std::vector<Task> tasks;
  std::vector<Resource> resources;
  std::vector<PrecedenceArc> precedences;

  int num_tasks() const { return static_cast<int>(tasks.size()); }
  int num_resources() const { return static_cast<int>(resources.size()); }

  bool operator==(const SchedulingInstance&) const = default;
};

/// Throws MalformedInput (or a subclass) when an instance invariant is broken.
void Validate(const SchedulingInstance& instance);

enum class InstanceFormat { kPsplibSm, kProgenMaxSch, kPattersonRcp, kCanonicalJson };

/// Accepts "psplib-sm"/"sm", "sch", "rcp"/"patterson", "json".
InstanceFormat InstanceFormatFromString(std::string_view text);

/// Guesses the format from a file extension; nullopt if unknown.
std::optional<InstanceFormat> InstanceFormatFromPath(std::string_view path);

/// Parses `text` in the given format. Non-fatal oddities (ignored trailing
/// sections, ignored non-renewable resources) are appended to `warnings`.
SchedulingInstance ParseInstance(std::string_view text, InstanceFormat format,
                                 std::vector<std::string>* warnings = nullptr);

/// Compact canonical JSON; ParseInstance(EncodeCanonical(x), kCanonicalJson) == x.
std::string EncodeCanonical(const SchedulingInstance& instance);

/// Dense m x n nonnegative matrix A, rhs b and shared durations d, restricted
/// to tasks with positive duration and at least one positive demand.
class DemandSystem {
 public:
  DemandSystem() = default;
  /// `matrix` is row-major, rows() * cols() entries.
  DemandSystem(int rows, int cols, std::vector<Value> matrix, std::vector<Value> rhs,
               std::vector<Value> durations, std::vector<TaskId> task_map);

  /// Convenience for tests: rows given as nested vectors, identity task map.
  static DemandSystem FromRows(const std::vector<std::vector<Value>>& rows,
                               std::vector<Value> rhs, std::vector<Value> durations);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Value at(int row, Column col) const { return matrix_[static_cast<std::size_t>(row) * cols_ + col]; }
  std::span<const Value> row(int r) const {
    return {matrix_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  const std::vector<Value>& rhs() const { return rhs_; }
  Value rhs(int r) const { return rhs_[r]; }
  const std::vector<Value>& durations() const { return durations_; }
  Value duration(Column c) const { return durations_[c]; }
  /// Column index -> original task id.
  const std::vector<TaskId>& task_map() const { return task_map_; }

  bool operator==(const DemandSystem&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Value> matrix_;
  std::vector<Value> rhs_;
  std::vector<Value> durations_;
  std::vector<TaskId> task_map_;
};

/// One row per resource. Throws InfeasibleTask when a retained task demands
/// more than a capacity.
DemandSystem ToDemandSystem(const SchedulingInstance& instance);

}  // namespace cumlift
