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

// Sequential lifting of cover inequalities and the selection of inferred
// cumulative constraints.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cumlift/instance.hpp"
#include "cumlift/polyhedral.hpp"

namespace cumlift {

struct LiftingConfig {
  int n_cover = 100;
  int n_out = 5;
  /// 2 restricts seeds to binary covers (disjunctive-only mode).
  std::optional<int> max_cover_cardinality;
  /// Brute-force check of every reported inequality, applied only when the
  /// demand system has at most `bruteforce_limit` columns.
  bool bruteforce_verify = true;
  int bruteforce_limit = kDefaultBruteForceLimit;

  /// Throws std::invalid_argument on out-of-range values.
  void Check() const;
};

struct LiftStep {
  Column column = 0;
  std::optional<Value> max_value;  // v*, nullopt if x_column = 1 is infeasible
  Value coefficient = 0;
};

struct LiftResult {
  LiftedInequality inequality;
  std::vector<LiftStep> steps;  // in lifting order
  std::vector<Column> infeasible_columns;
  std::size_t subproblem_calls = 0;
};

/// Lifts x(C) <= |C| - 1 over all remaining columns, shortest first (lowest
/// column on ties). A column that cannot be one on its own gets coefficient
/// pi_0 and is listed in `infeasible_columns`.
LiftResult LiftCover(const Cover& cover, const DemandSystem& system);

/// Entries (S, k): every k-subset of S is known to be a cover.
class SkipSet {
 public:
  explicit SkipSet(int columns) : columns_(columns) {}

  void Add(std::span<const Column> members, int threshold);
  /// Some entry (S, k) has S containing `members` and k <= |members|.
  bool Skips(std::span<const Column> members) const;
  std::size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    std::vector<char> in_set;
    int threshold;
  };
  int columns_;
  std::vector<Entry> entries_;
};

struct InferredConstraint {
  LiftedInequality inequality;
  Cover source;
  Rational capacity_bound;
  std::vector<Column> infeasible_columns;
};

struct CoverOutcome {
  bool skipped = false;
  bool dominated = false;
  std::size_t subproblem_calls = 0;
};

struct InferenceStats {
  std::size_t covers_considered = 0;
  std::size_t covers_skipped = 0;
  std::size_t covers_lifted = 0;
  std::size_t dominated = 0;
  std::size_t subproblem_calls = 0;
  std::vector<CoverOutcome> outcomes;  // one per input cover, same order
};

struct InferenceResult {
  std::vector<InferredConstraint> constraints;  // best capacity bound first
  InferenceStats stats;
};

/// Lifts the covers in order, skipping those already implied by the skip
/// set and discarding results dominated by a row, then keeps the n_out
/// results of highest capacity bound (earlier results win ties).
InferenceResult InferConstraints(const DemandSystem& system, std::span<const Cover> covers,
                                 const LiftingConfig& config);

}  // namespace cumlift
