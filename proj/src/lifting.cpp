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

#include "cumlift/lifting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "cumlift/subproblem.hpp"

namespace cumlift {

void LiftingConfig::Check() const {
  if (n_cover < 1) throw std::invalid_argument("n_cover must be at least 1");
  if (n_out < 1) throw std::invalid_argument("n_out must be at least 1");
  if (max_cover_cardinality && *max_cover_cardinality < 2) {
    throw std::invalid_argument("max_cover_cardinality must be at least 2");
  }
  if (bruteforce_limit < 0 || bruteforce_limit > 30) throw std::invalid_argument("bruteforce_limit must be in [0, 30]");
}

LiftResult LiftCover(const Cover& cover, const DemandSystem& system) {
  const int n = system.cols();
  LiftResult result;
  result.inequality = CoverInequality(cover.members, n);
  auto& pi = result.inequality.coeffs;
  const Value pi0 = result.inequality.rhs;

  std::vector<char> in_cover(n, 0);
  for (Column c : cover.members) in_cover[c] = 1;
  std::vector<Column> remaining;
  for (Column c = 0; c < n; ++c) {
    if (!in_cover[c]) remaining.push_back(c);
  }
  const auto& d = system.durations();
  std::stable_sort(remaining.begin(), remaining.end(), [&](Column x, Column y) { return d[x] < d[y]; });

  // Lifted columns with a positive coefficient; zero coefficients never
  // contribute to v*.
  std::vector<Column> support(cover.members.begin(), cover.members.end());
  for (Column i : remaining) {
    std::vector<Value> weights;
    weights.reserve(support.size());
    for (Column c : support) weights.push_back(pi[c]);
    const auto problem = LiftingSubproblem::ForColumn(system, i, support, std::move(weights));
    const auto v = MaxValue(problem, pi0);
    ++result.subproblem_calls;
    LiftStep step{i, v, 0};
    if (v) {
      step.coefficient = pi0 - *v;
    } else {
      step.coefficient = pi0;
      result.infeasible_columns.push_back(i);
    }
    pi[i] = step.coefficient;
    if (pi[i] > 0) support.insert(std::upper_bound(support.begin(), support.end(), i), i);
    result.steps.push_back(step);
  }
  return result;
}

void SkipSet::Add(std::span<const Column> members, int threshold) {
  Entry entry{std::vector<char>(columns_, 0), threshold};
  for (Column c : members) entry.in_set[c] = 1;
  entries_.push_back(std::move(entry));
}

bool SkipSet::Skips(std::span<const Column> members) const {
  const int size = static_cast<int>(members.size());
  for (const Entry& entry : entries_) {
    if (entry.threshold > size) continue;
    if (std::all_of(members.begin(), members.end(), [&](Column c) { return entry.in_set[c] != 0; })) return true;
  }
  return false;
}

InferenceResult InferConstraints(const DemandSystem& system, std::span<const Cover> covers,
                                 const LiftingConfig& config) {
  config.Check();
  InferenceResult result;
  auto& stats = result.stats;
  SkipSet skip(system.cols());
  std::vector<InferredConstraint> found;

  for (const Cover& cover : covers) {
    ++stats.covers_considered;
    CoverOutcome outcome;
    if (skip.Skips(cover.members)) {
      outcome.skipped = true;
      ++stats.covers_skipped;
      stats.outcomes.push_back(outcome);
      continue;
    }
    LiftResult lifted = LiftCover(cover, system);
    ++stats.covers_lifted;
    outcome.subproblem_calls = lifted.subproblem_calls;
    stats.subproblem_calls += lifted.subproblem_calls;

    std::vector<Column> unit;
    for (Column c = 0; c < system.cols(); ++c) {
      if (lifted.inequality.coeffs[c] == 1) unit.push_back(c);
    }
    skip.Add(unit, cover.size());

    if (IsDominated(lifted.inequality, system)) {
      outcome.dominated = true;
      ++stats.dominated;
      stats.outcomes.push_back(outcome);
      continue;
    }
    stats.outcomes.push_back(outcome);
    Rational bound = CapacityBound(lifted.inequality, system.durations());
    found.push_back(InferredConstraint{std::move(lifted.inequality), cover, bound, std::move(lifted.infeasible_columns)});
  }

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return found[x].capacity_bound > found[y].capacity_bound; });
  const std::size_t keep = std::min(order.size(), static_cast<std::size_t>(config.n_out));
  for (std::size_t k = 0; k < keep; ++k) result.constraints.push_back(std::move(found[order[k]]));
  return result;
}

}  // namespace cumlift
