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

// Inequalities over occupancy vectors, covers, the capacity bound, and the
// small-scale oracles used to check them.

#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "cumlift/instance.hpp"

namespace cumlift {

using Rational = boost::rational<Value>;

/// coeffs^T y <= rhs, one coefficient per demand-system column. Read as a
/// cumulative constraint with usages `coeffs` and capacity `rhs`.
struct LiftedInequality {
  std::vector<Value> coeffs;
  Value rhs = 0;

  int size() const { return static_cast<int>(coeffs.size()); }
  bool operator==(const LiftedInequality&) const = default;

  /// The inequality of row `r` of `system`.
  static LiftedInequality FromRow(const DemandSystem& system, int r);
};

enum class GenerationRule { kBinary, kTernary, kLongMax, kLongMin };

std::string_view ToString(GenerationRule rule);
GenerationRule GenerationRuleFromString(std::string_view text);

inline bool IsShort(GenerationRule rule) {
  return rule == GenerationRule::kBinary || rule == GenerationRule::kTernary;
}

/// Column set whose summed demands on `source_row` exceed its capacity.
struct Cover {
  std::vector<Column> members;  // strictly increasing
  int source_row = 0;
  GenerationRule rule = GenerationRule::kBinary;

  int size() const { return static_cast<int>(members.size()); }
  bool operator==(const Cover&) const = default;
};

/// x(C) <= |C| - 1 over `columns` columns.
LiftedInequality CoverInequality(std::span<const Column> members, int columns);

struct Schedule {
  std::vector<Value> starts;
};

bool IsCover(std::span<const Column> members, std::span<const Value> row, Value rhs);
bool IsCover(std::span<const Column> members, const DemandSystem& system, int row);

/// sum_i d_i pi_i / pi_0, exact. Throws ZeroCapacity when pi_0 == 0.
Rational CapacityBound(const LiftedInequality& ineq, std::span<const Value> durations);

/// Smallest integer >= CapacityBound; a lower bound on the span of the
/// support of the inequality in any schedule that satisfies it.
Value CapacityLowerBound(const LiftedInequality& ineq, std::span<const Value> durations);

Value Ceil(const Rational& value);

/// Some row r has coeffs <= a_r componentwise and rhs >= b_r.
bool IsDominated(const LiftedInequality& ineq, const DemandSystem& system);

struct ValidityResult {
  bool valid = true;
  std::optional<std::vector<int>> counterexample;  // 0/1 point of P(A, b) violating the inequality
};

inline constexpr int kDefaultBruteForceLimit = 20;

/// Enumerates every y in {0,1}^n with A y <= b (Gray-code order) and tests
/// pi^T y <= pi_0. Throws TooLarge when n > limit.
ValidityResult CheckValidityBruteForce(const LiftedInequality& ineq, const DemandSystem& system,
                                       int limit = kDefaultBruteForceLimit);

struct CumulativeCheck {
  bool satisfied = true;
  std::optional<Value> violated_at;  // earliest overloaded time point
};

/// Tests the usage profile of `schedule` against the capacity at every
/// interval start, where the piecewise constant profile can increase.
CumulativeCheck CheckCumulative(const Schedule& schedule, const LiftedInequality& ineq,
                                std::span<const Value> durations);

/// max(x_i + d_i) - min(x_i) over `support`. Throws EmptySupport.
Value Span(const Schedule& schedule, std::span<const Value> durations, std::span<const Column> support);

}  // namespace cumlift
