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

#include <algorithm>
#include <string>
#include <vector>

#include "cumlift/errors.hpp"
#include "cumlift/report.hpp"

namespace cumlift {

SearchlessBound ComputeSearchlessLowerBound(const DemandSystem& system, std::span<const LiftedInequality> inferred) {
  SearchlessBound best;
  for (std::size_t k = 0; k < inferred.size(); ++k) {
    if (inferred[k].rhs == 0) continue;
    const Value lb = CapacityLowerBound(inferred[k], system.durations());
    if (best.certificate.kind == Certificate::Kind::kNone || lb > best.bound) {
      best = {lb, {Certificate::Kind::kInferred, static_cast<int>(k)}};
    }
  }
  for (int r = 0; r < system.rows(); ++r) {
    if (system.rhs(r) == 0) continue;
    const Value lb = CapacityLowerBound(LiftedInequality::FromRow(system, r), system.durations());
    if (best.certificate.kind == Certificate::Kind::kNone || lb > best.bound) {
      best = {lb, {Certificate::Kind::kResource, r}};
    }
  }
  return best;
}

Value PrecedencePathLowerBound(const SchedulingInstance& instance) {
  const int n = instance.num_tasks();
  std::vector<Value> earliest(n, 0);
  bool changed = true;
  for (int pass = 0; pass <= n && changed; ++pass) {
    changed = false;
    for (const PrecedenceArc& arc : instance.precedences) {
      const Value candidate = earliest[arc.from] + arc.offset;
      if (candidate > earliest[arc.to]) {
        earliest[arc.to] = candidate;
        changed = true;
      }
    }
    if (changed && pass == n) {
      throw PositiveCycle("precedence offsets contain a cycle of positive length; no schedule exists");
    }
  }
  Value bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, earliest[i] + instance.tasks[i].duration);
  return bound;
}

}  // namespace cumlift
