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

#include "cumlift/instance.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "cumlift/errors.hpp"

namespace cumlift {

std::string_view ToString(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kRcpsp:
      return "RCPSP";
    case InstanceKind::kRcpspMax:
      return "RCPSP_MAX";
  }
  return "RCPSP";
}

InstanceKind InstanceKindFromString(std::string_view text) {
  if (text == "RCPSP") return InstanceKind::kRcpsp;
  if (text == "RCPSP_MAX") return InstanceKind::kRcpspMax;
  throw MalformedInput("unknown instance kind '" + std::string(text) + "'");
}

InstanceFormat InstanceFormatFromString(std::string_view text) {
  if (text == "psplib-sm" || text == "sm") return InstanceFormat::kPsplibSm;
  if (text == "sch" || text == "progen-max") return InstanceFormat::kProgenMaxSch;
  if (text == "rcp" || text == "patterson") return InstanceFormat::kPattersonRcp;
  if (text == "json") return InstanceFormat::kCanonicalJson;
  throw std::invalid_argument("unknown instance format '" + std::string(text) + "'");
}

std::optional<InstanceFormat> InstanceFormatFromPath(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  std::string ext(path.substr(dot + 1));
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == "sm") return InstanceFormat::kPsplibSm;
  if (ext == "sch") return InstanceFormat::kProgenMaxSch;
  if (ext == "rcp") return InstanceFormat::kPattersonRcp;
  if (ext == "json") return InstanceFormat::kCanonicalJson;
  return std::nullopt;
}

void Validate(const SchedulingInstance& instance) {
  const int n = instance.num_tasks();
  const auto m = instance.resources.size();
  if (instance.horizon && *instance.horizon < 0) throw NegativeValue("negative horizon");
  for (std::size_t r = 0; r < m; ++r) {
    if (instance.resources[r].capacity < 0) {
      throw NegativeValue("resource " + std::to_string(r) + " has negative capacity");
    }
  }
  for (int i = 0; i < n; ++i) {
    const Task& task = instance.tasks[i];
    if (task.duration < 0) throw NegativeValue("task " + std::to_string(i) + " has negative duration");
    if (task.demands.size() != m) {
      throw InconsistentCounts("task " + std::to_string(i) + " lists " + std::to_string(task.demands.size()) +
                               " demands for " + std::to_string(m) + " resources");
    }
    for (Value a : task.demands) {
      if (a < 0) throw NegativeValue("task " + std::to_string(i) + " has a negative demand");
    }
  }
  for (const PrecedenceArc& arc : instance.precedences) {
    if (arc.from < 0 || arc.from >= n || arc.to < 0 || arc.to >= n) {
      throw MalformedInput("precedence " + std::to_string(arc.from) + " -> " + std::to_string(arc.to) +
                           " refers to a missing task");
    }
    if (arc.from == arc.to) throw MalformedInput("self-loop precedence on task " + std::to_string(arc.from));
    if (instance.kind == InstanceKind::kRcpsp && arc.offset != instance.tasks[arc.from].duration) {
      throw MalformedInput("RCPSP precedence " + std::to_string(arc.from) + " -> " + std::to_string(arc.to) +
                           " has offset " + std::to_string(arc.offset) + " instead of the source duration");
    }
  }
}

DemandSystem::DemandSystem(int rows, int cols, std::vector<Value> matrix, std::vector<Value> rhs,
                           std::vector<Value> durations, std::vector<TaskId> task_map)
    : rows_(rows),
      cols_(cols),
      matrix_(std::move(matrix)),
      rhs_(std::move(rhs)),
      durations_(std::move(durations)),
      task_map_(std::move(task_map)) {
  if (matrix_.size() != static_cast<std::size_t>(rows_) * cols_ || rhs_.size() != static_cast<std::size_t>(rows_) ||
      durations_.size() != static_cast<std::size_t>(cols_) || task_map_.size() != static_cast<std::size_t>(cols_)) {
    throw std::invalid_argument("DemandSystem: inconsistent dimensions");
  }
}

DemandSystem DemandSystem::FromRows(const std::vector<std::vector<Value>>& rows, std::vector<Value> rhs,
                                    std::vector<Value> durations) {
  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(durations.size());
  std::vector<Value> matrix;
  matrix.reserve(static_cast<std::size_t>(m) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("DemandSystem: ragged rows");
    matrix.insert(matrix.end(), row.begin(), row.end());
  }
  std::vector<TaskId> task_map(n);
  for (int c = 0; c < n; ++c) task_map[c] = c;
  return DemandSystem(m, n, std::move(matrix), std::move(rhs), std::move(durations), std::move(task_map));
}

DemandSystem ToDemandSystem(const SchedulingInstance& instance) {
  const int m = instance.num_resources();
  std::vector<TaskId> kept;
  for (int i = 0; i < instance.num_tasks(); ++i) {
    const Task& task = instance.tasks[i];
    if (task.duration <= 0) continue;
    if (std::none_of(task.demands.begin(), task.demands.end(), [](Value a) { return a > 0; })) continue;
    for (int r = 0; r < m; ++r) {
      if (task.demands[r] > instance.resources[r].capacity) {
        throw InfeasibleTask("task " + std::to_string(i) + " demands " + std::to_string(task.demands[r]) +
                             " of resource " + std::to_string(r) + " with capacity " +
                             std::to_string(instance.resources[r].capacity));
      }
    }
    kept.push_back(i);
  }
  const int n = static_cast<int>(kept.size());
  std::vector<Value> matrix(static_cast<std::size_t>(m) * n);
  std::vector<Value> rhs(m);
  std::vector<Value> durations(n);
  for (int r = 0; r < m; ++r) {
    rhs[r] = instance.resources[r].capacity;
    for (int c = 0; c < n; ++c) matrix[static_cast<std::size_t>(r) * n + c] = instance.tasks[kept[c]].demands[r];
  }
  for (int c = 0; c < n; ++c) durations[c] = instance.tasks[kept[c]].duration;
  return DemandSystem(m, n, std::move(matrix), std::move(rhs), std::move(durations), std::move(kept));
}

}  // namespace cumlift
