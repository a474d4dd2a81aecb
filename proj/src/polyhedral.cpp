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

#include "cumlift/polyhedral.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "cumlift/errors.hpp"

namespace cumlift {

LiftedInequality LiftedInequality::FromRow(const DemandSystem& system, int r) {
  const auto row = system.row(r);
  return LiftedInequality{std::vector<Value>(row.begin(), row.end()), system.rhs(r)};
}

std::string_view ToString(GenerationRule rule) {
  switch (rule) {
    case GenerationRule::kBinary:
      return "BINARY";
    case GenerationRule::kTernary:
      return "TERNARY";
    case GenerationRule::kLongMax:
      return "LONG_MAX";
    case GenerationRule::kLongMin:
      return "LONG_MIN";
  }
  return "BINARY";
}

GenerationRule GenerationRuleFromString(std::string_view text) {
  if (text == "BINARY") return GenerationRule::kBinary;
  if (text == "TERNARY") return GenerationRule::kTernary;
  if (text == "LONG_MAX") return GenerationRule::kLongMax;
  if (text == "LONG_MIN") return GenerationRule::kLongMin;
  throw MalformedInput("unknown generation rule '" + std::string(text) + "'");
}

LiftedInequality CoverInequality(std::span<const Column> members, int columns) {
  LiftedInequality ineq;
  ineq.coeffs.assign(columns, 0);
  for (Column c : members) ineq.coeffs[c] = 1;
  ineq.rhs = static_cast<Value>(members.size()) - 1;
  return ineq;
}

bool IsCover(std::span<const Column> members, std::span<const Value> row, Value rhs) {
  Value total = 0;
  for (Column c : members) total += row[c];
  return total > rhs;
}

bool IsCover(std::span<const Column> members, const DemandSystem& system, int row) {
  return IsCover(members, system.row(row), system.rhs(row));
}

Rational CapacityBound(const LiftedInequality& ineq, std::span<const Value> durations) {
  if (ineq.rhs == 0) throw ZeroCapacity("capacity bound of an inequality with zero right-hand side");
  Value usage = 0;
  for (std::size_t i = 0; i < ineq.coeffs.size(); ++i) usage += durations[i] * ineq.coeffs[i];
  return Rational(usage, ineq.rhs);
}

Value Ceil(const Rational& value) {
  const Value q = value.numerator() / value.denominator();
  const Value r = value.numerator() % value.denominator();
  return r > 0 ? q + 1 : q;
}

Value CapacityLowerBound(const LiftedInequality& ineq, std::span<const Value> durations) {
  return Ceil(CapacityBound(ineq, durations));
}

bool IsDominated(const LiftedInequality& ineq, const DemandSystem& system) {
  for (int r = 0; r < system.rows(); ++r) {
    if (system.rhs(r) > ineq.rhs) continue;
    const auto row = system.row(r);
    bool below = true;
    for (int c = 0; c < system.cols() && below; ++c) below = ineq.coeffs[c] <= row[c];
    if (below) return true;
  }
  return false;
}

ValidityResult CheckValidityBruteForce(const LiftedInequality& ineq, const DemandSystem& system, int limit) {
  const int n = system.cols();
  const int m = system.rows();
  if (n > limit) {
    throw TooLarge("brute-force validity check over " + std::to_string(n) + " columns exceeds the limit of " +
                   std::to_string(limit));
  }
  // y = 0 is feasible because b >= 0, and satisfies pi^T y <= pi_0.
  std::vector<Value> load(m, 0);
  std::vector<int> point(n, 0);
  int overloaded = 0;
  Value lhs = 0;
  for (int r = 0; r < m; ++r) {
    if (system.rhs(r) < 0) ++overloaded;
  }
  if (overloaded == 0 && lhs > ineq.rhs) return {false, point};

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int flip = std::countr_zero(step);
    const Value sign = point[flip] ? -1 : 1;
    point[flip] ^= 1;
    lhs += sign * ineq.coeffs[flip];
    for (int r = 0; r < m; ++r) {
      const bool was = load[r] > system.rhs(r);
      load[r] += sign * system.at(r, flip);
      const bool now = load[r] > system.rhs(r);
      overloaded += static_cast<int>(now) - static_cast<int>(was);
    }
    if (overloaded == 0 && lhs > ineq.rhs) return {false, point};
  }
  return {true, std::nullopt};
}

CumulativeCheck CheckCumulative(const Schedule& schedule, const LiftedInequality& ineq,
                                std::span<const Value> durations) {
  std::vector<std::pair<Value, Value>> events;  // (time, usage delta)
  for (std::size_t i = 0; i < schedule.starts.size(); ++i) {
    if (durations[i] <= 0 || ineq.coeffs[i] == 0) continue;
    events.emplace_back(schedule.starts[i], ineq.coeffs[i]);
    events.emplace_back(schedule.starts[i] + durations[i], -ineq.coeffs[i]);
  }
  std::sort(events.begin(), events.end());
  Value usage = 0;
  for (std::size_t k = 0; k < events.size();) {
    const Value time = events[k].first;
    for (; k < events.size() && events[k].first == time; ++k) usage += events[k].second;
    if (usage > ineq.rhs) return {false, time};
  }
  return {true, std::nullopt};
}

Value Span(const Schedule& schedule, std::span<const Value> durations, std::span<const Column> support) {
  if (support.empty()) throw EmptySupport("span over an empty support");
  Value first = std::numeric_limits<Value>::max();
  Value last = std::numeric_limits<Value>::min();
  for (Column c : support) {
    first = std::min(first, schedule.starts[c]);
    last = std::max(last, schedule.starts[c] + durations[c]);
  }
  return last - first;
}

}  // namespace cumlift
