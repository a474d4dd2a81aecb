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

// Exact solver for the lifting subproblem
//
//   max  sum_c w_c x_c
//   s.t. sum_c a_{j,c} x_c <= rhs_j   for every row j,   x in {0,1},
//
// a multidimensional 0-1 knapsack with nonnegative data. Depth-first
// branch and bound; the bound at a node is the smallest 0-1 knapsack value
// over the free variables for each row and for one surrogate row with
// Lagrangian multipliers, read from tables indexed by objective value
// (fractional knapsacks when the tables would be huge). Dominated variables
// are only taken together with the variable that dominates them.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cumlift/instance.hpp"

namespace cumlift {

struct LiftingSubproblem {
  std::vector<Column> variables;  // column ids, used to name the witness
  std::vector<Value> weights;     // one per variable, >= 0
  int rows = 0;
  std::vector<Value> demands;     // rows x variables, row-major
  std::vector<Value> reduced_rhs;  // one per row; may be negative

  int size() const { return static_cast<int>(variables.size()); }
  Value demand(int row, int var) const { return demands[static_cast<std::size_t>(row) * variables.size() + var]; }

  /// The subproblem for setting column `lifted` to one, over `variables`
  /// with `weights`, against every row of `system`.
  static LiftingSubproblem ForColumn(const DemandSystem& system, Column lifted, std::vector<Column> variables,
                                     std::vector<Value> weights);
};

struct SubproblemSolution {
  Value value = 0;
  /// Lexicographically smallest optimal set of column ids, counting only
  /// variables with positive weight (zero-weight ones never change v*).
  std::vector<Column> witness;
};

/// nullopt when the problem is infeasible, i.e. some reduced rhs is negative.
std::optional<SubproblemSolution> Solve(const LiftingSubproblem& problem);

/// Optimal value only. When `cap` is given the search stops as soon as a
/// solution of value >= cap is found and returns min(value, cap); pass a
/// known upper bound on the optimum (the lifting rhs) to keep that exact.
std::optional<Value> MaxValue(const LiftingSubproblem& problem, std::optional<Value> cap = std::nullopt);

}  // namespace cumlift
