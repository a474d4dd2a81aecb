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

#include "cumlift/subproblem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

namespace cumlift {

LiftingSubproblem LiftingSubproblem::ForColumn(const DemandSystem& system, Column lifted, std::vector<Column> variables,
                                               std::vector<Value> weights) {
  LiftingSubproblem problem;
  problem.rows = system.rows();
  problem.demands.reserve(static_cast<std::size_t>(system.rows()) * variables.size());
  for (int j = 0; j < system.rows(); ++j) {
    for (Column c : variables) problem.demands.push_back(system.at(j, c));
    problem.reduced_rhs.push_back(system.rhs(j) - system.at(j, lifted));
  }
  problem.variables = std::move(variables);
  problem.weights = std::move(weights);
  return problem;
}

namespace {

constexpr Value kNoCap = std::numeric_limits<Value>::max();
constexpr double kMaxTableEntries = 1 << 24;
constexpr Value kSurrogateScale = 1000;
constexpr Value kMaxSurrogateCapacity = Value{1} << 30;
constexpr std::size_t kMaxDominancePairs = std::size_t{1} << 22;

class BranchAndBound {
 public:
  // Takes the variables of `problem` selected by `keep`, dropping those
  // with zero weight or that cannot fit on their own.
  BranchAndBound(const LiftingSubproblem& problem, std::span<const int> keep, std::vector<Value> capacity, Value cap)
      : rows_(problem.rows), capacity_(std::move(capacity)), cap_(cap) {
    for (int v : keep) {
      if (problem.weights[v] <= 0) continue;
      bool fits = true;
      bool free = true;
      for (int j = 0; j < rows_; ++j) {
        const Value a = problem.demand(j, v);
        fits = fits && a <= capacity_[j];
        free = free && a == 0;
      }
      if (!fits) continue;
      if (free) {
        base_ += problem.weights[v];
        continue;
      }
      candidates_.push_back(v);
    }
    const int n = static_cast<int>(candidates_.size());
    weight_.resize(n);
    demand_.resize(static_cast<std::size_t>(n) * rows_);
    for (int p = 0; p < n; ++p) {
      weight_[p] = problem.weights[candidates_[p]];
      for (int j = 0; j < rows_; ++j) demand_[static_cast<std::size_t>(p) * rows_ + j] = problem.demand(j, candidates_[p]);
    }
    suffix_weight_.assign(n + 1, 0);
    for (int p = n - 1; p >= 0; --p) suffix_weight_[p] = suffix_weight_[p + 1] + weight_[p];
    horizon_ = std::min(cap_ == kNoCap ? suffix_weight_[0] : cap_ - base_, suffix_weight_[0]);
    horizon_ = std::max<Value>(horizon_, 0);
  }

  Value Run() {
    const int n = static_cast<int>(weight_.size());
    best_ = 0;
    Reorder({});
    Greedy();
    if (Settled() || best_ >= RootBound()) return Result();

    Prepare();
    Greedy();
    forbidden_.assign(n, 0);
    residual_ = capacity_;
    if (!Settled()) Search(0, 0);
    return Result();
  }

 private:
  Value a(int p, int j) const { return demand_[static_cast<std::size_t>(p) * rows_ + j]; }

  bool Settled() const { return base_ + best_ >= cap_ || best_ >= suffix_weight_[0]; }
  Value Result() const { return std::min(base_ + best_, cap_); }

  // Sorts positions by weight over surrogate demand, or over the largest
  // capacity share without multipliers, descending.
  void Reorder(const std::vector<double>& lambda) {
    const int n = static_cast<int>(weight_.size());
    std::vector<double> score(n);
    for (int p = 0; p < n; ++p) {
      double used = 0.0;
      for (int j = 0; j < rows_; ++j) {
        if (!lambda.empty()) {
          used += lambda[j] * static_cast<double>(a(p, j));
        } else if (capacity_[j] > 0) {
          used = std::max(used, static_cast<double>(a(p, j)) / static_cast<double>(capacity_[j]));
        }
      }
      score[p] = used > 0 ? static_cast<double>(weight_[p]) / used : std::numeric_limits<double>::infinity();
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return score[x] > score[y]; });
    std::vector<int> candidates(n);
    std::vector<Value> weight(n);
    std::vector<Value> demand(demand_.size());
    for (int p = 0; p < n; ++p) {
      candidates[p] = candidates_[order[p]];
      weight[p] = weight_[order[p]];
      std::copy_n(&demand_[static_cast<std::size_t>(order[p]) * rows_], rows_, &demand[static_cast<std::size_t>(p) * rows_]);
    }
    candidates_ = std::move(candidates);
    weight_ = std::move(weight);
    demand_ = std::move(demand);
    for (int p = n - 1; p >= 0; --p) suffix_weight_[p] = suffix_weight_[p + 1] + weight_[p];
  }

  void Greedy() {
    const int n = static_cast<int>(weight_.size());
    std::vector<Value> room = capacity_;
    Value value = 0;
    for (int p = 0; p < n; ++p) {
      bool fits = true;
      for (int j = 0; j < rows_ && fits; ++j) fits = a(p, j) <= room[j];
      if (!fits) continue;
      for (int j = 0; j < rows_; ++j) room[j] -= a(p, j);
      value += weight_[p];
    }
    best_ = std::max(best_, value);
  }

  // Smallest single-row 0-1 knapsack value over all positions.
  Value RootBound() const {
    Value bound = horizon_;
    const double entries = static_cast<double>(weight_.size()) * static_cast<double>(horizon_ + 1);
    if (entries > kMaxTableEntries) return suffix_weight_[0];
    std::vector<Value> least(static_cast<std::size_t>(horizon_) + 1);
    for (int j = 0; j < rows_ && bound > 0; ++j) {
      std::fill(least.begin(), least.end(), kNoCap);
      least[0] = 0;
      for (std::size_t p = 0; p < weight_.size(); ++p) {
        const auto w = static_cast<std::size_t>(weight_[p]);
        const Value demand = a(static_cast<int>(p), j);
        for (std::size_t k = least.size(); k-- > 1;) {
          const Value rest = least[k > w ? k - w : 0];
          if (rest != kNoCap) least[k] = std::min(least[k], rest + demand);
        }
      }
      while (bound > 0 && least[bound] > capacity_[j]) --bound;
    }
    return bound;
  }

  // Search order, bound tables and dominance lists.
  void Prepare() {
    const int n = static_cast<int>(weight_.size());
    const std::vector<double> lambda = rows_ > 1 ? SurrogateMultipliers() : std::vector<double>{};
    if (!lambda.empty()) Reorder(lambda);

    // Value-indexed knapsack tables, one per row plus one surrogate row;
    // fractional knapsacks per row when the tables would be huge.
    const double entries = static_cast<double>(n + 1) * static_cast<double>(horizon_ + 1) * (rows_ + 1);
    if (entries <= kMaxTableEntries) {
      for (int j = 0; j < rows_; ++j) {
        std::vector<Value> unit(rows_, 0);
        unit[j] = 1;
        AddTable(std::move(unit));
      }
      if (!lambda.empty()) {
        const double top = *std::max_element(lambda.begin(), lambda.end());
        std::vector<Value> scaled(rows_);
        for (int j = 0; j < rows_; ++j) scaled[j] = std::llround(lambda[j] / top * kSurrogateScale);
        AddTable(std::move(scaled));
      }
    } else {
      row_order_.resize(rows_);
      for (int j = 0; j < rows_; ++j) {
        auto& ord = row_order_[j];
        ord.resize(n);
        std::iota(ord.begin(), ord.end(), 0);
        std::stable_sort(ord.begin(), ord.end(), [&](int x, int y) {
          return weight_[x] * a(y, j) > weight_[y] * a(x, j);
        });
      }
    }

    // q is dominated by an earlier p when it weighs no more and demands no
    // less on every row. Some optimum never takes q without p, since
    // swapping q for p keeps a set feasible and moves it to earlier positions.
    dominated_.assign(n, {});
    std::size_t pairs = 0;
    for (int p = 0; p < n && pairs < kMaxDominancePairs; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (weight_[q] > weight_[p]) continue;
        bool covers = true;
        for (int j = 0; j < rows_ && covers; ++j) covers = a(q, j) >= a(p, j);
        if (covers) dominated_[p].push_back(q);
      }
      pairs += dominated_[p].size();
    }
  }

  // Upper bound on what positions >= pos can add with the current residual.
  Value Bound(int pos) const {
    Value bound = suffix_weight_[pos];
    if (!tables_.empty()) {
      const auto width = static_cast<std::size_t>(horizon_) + 1;
      bound = std::min(bound, horizon_);
      for (const Table& t : tables_) {
        if (bound == 0) break;
        Value room = 0;
        for (int j = 0; j < rows_; ++j) room += t.lambda[j] * residual_[j];
        const Value* here = &t.least[static_cast<std::size_t>(pos) * width];
        while (bound > 0 && here[bound] > room) --bound;
      }
      return bound;
    }
    for (int j = 0; j < rows_; ++j) {
      Value room = residual_[j];
      Value gain = 0;
      for (int p : row_order_[j]) {
        if (p < pos) continue;
        const Value demand = a(p, j);
        if (demand <= room) {
          room -= demand;
          gain += weight_[p];
        } else {
          gain += weight_[p] * room / demand;
          break;
        }
      }
      bound = std::min(bound, gain);
    }
    return bound;
  }

  void AddTable(std::vector<Value> lambda) {
    const int n = static_cast<int>(weight_.size());
    const auto width = static_cast<std::size_t>(horizon_) + 1;
    Table t{std::move(lambda), std::vector<Value>((n + 1) * width, kNoCap)};
    t.least[static_cast<std::size_t>(n) * width] = 0;
    for (int p = n - 1; p >= 0; --p) {
      Value demand = 0;
      for (int j = 0; j < rows_; ++j) demand += t.lambda[j] * a(p, j);
      const Value* next = &t.least[static_cast<std::size_t>(p + 1) * width];
      Value* here = &t.least[static_cast<std::size_t>(p) * width];
      for (std::size_t w = 0; w < width; ++w) {
        const Value rest = next[w > static_cast<std::size_t>(weight_[p]) ? w - weight_[p] : 0];
        here[w] = std::min(next[w], rest == kNoCap ? kNoCap : rest + demand);
      }
    }
    tables_.push_back(std::move(t));
  }

  // Row multipliers from a short subgradient descent on the Lagrangian dual
  // of the LP relaxation; empty if none apply. Any nonnegative choice gives a
  // valid surrogate row; good ones give a tight bound.
  std::vector<double> SurrogateMultipliers() const {
    const int n = static_cast<int>(weight_.size());
    Value largest = 0;
    for (Value c : capacity_) largest = std::max(largest, c);
    if (n == 0 || largest > kMaxSurrogateCapacity) return {};
    std::vector<double> lambda(rows_);
    for (int j = 0; j < rows_; ++j) lambda[j] = 1.0 / static_cast<double>(std::max<Value>(capacity_[j], 1));
    std::vector<double> best_lambda = lambda;
    double best = std::numeric_limits<double>::infinity();
    double theta = 1.0;
    int stale = 0;
    std::vector<double> g(rows_);
    for (int iteration = 0; iteration < 80; ++iteration) {
      double value = 0.0;
      for (int j = 0; j < rows_; ++j) {
        value += lambda[j] * static_cast<double>(capacity_[j]);
        g[j] = static_cast<double>(capacity_[j]);
      }
      for (int p = 0; p < n; ++p) {
        double reduced = static_cast<double>(weight_[p]);
        for (int j = 0; j < rows_; ++j) reduced -= lambda[j] * static_cast<double>(a(p, j));
        if (reduced > 0) {
          value += reduced;
          for (int j = 0; j < rows_; ++j) g[j] -= static_cast<double>(a(p, j));
        }
      }
      if (value < best - 1e-9) {
        best = value;
        best_lambda = lambda;
        stale = 0;
      } else if (++stale >= 5) {
        theta /= 2;
        stale = 0;
      }
      double norm = 0.0;
      for (double x : g) norm += x * x;
      if (norm == 0.0 || theta < 1e-4) break;
      const double step = theta * 0.1 * value / norm;
      for (int j = 0; j < rows_; ++j) lambda[j] = std::max(0.0, lambda[j] - step * g[j]);
    }
    if (*std::max_element(best_lambda.begin(), best_lambda.end()) <= 0.0) return {};
    return best_lambda;
  }

  bool Done() const { return base_ + best_ >= cap_; }

  void Search(int pos, Value value) {
    if (value > best_) {
      best_ = value;
      if (Done()) return;
    }
    const int n = static_cast<int>(weight_.size());
    if (pos == n) return;
    if (value + Bound(pos) <= best_) return;

    bool fits = forbidden_[pos] == 0;
    for (int j = 0; j < rows_ && fits; ++j) fits = a(pos, j) <= residual_[j];
    if (fits) {
      for (int j = 0; j < rows_; ++j) residual_[j] -= a(pos, j);
      Search(pos + 1, value + weight_[pos]);
      for (int j = 0; j < rows_; ++j) residual_[j] += a(pos, j);
      if (Done()) return;
    }
    for (int q : dominated_[pos]) ++forbidden_[q];
    Search(pos + 1, value);
    for (int q : dominated_[pos]) --forbidden_[q];
  }

  int rows_;
  std::vector<Value> capacity_;
  Value cap_;
  Value base_ = 0;
  std::vector<int> candidates_;
  std::vector<Value> weight_;
  std::vector<Value> demand_;
  std::vector<Value> suffix_weight_;
  // least[p * (horizon_ + 1) + w]: smallest lambda^T a(S) over sets S of
  // positions >= p with weight(S) >= w.
  struct Table {
    std::vector<Value> lambda;
    std::vector<Value> least;
  };
  Value horizon_ = 0;
  std::vector<Table> tables_;
  std::vector<std::vector<int>> row_order_;
  std::vector<Value> residual_;
  std::vector<std::vector<int>> dominated_;
  std::vector<int> forbidden_;
  Value best_ = 0;
};

bool Infeasible(const LiftingSubproblem& problem) {
  return std::any_of(problem.reduced_rhs.begin(), problem.reduced_rhs.end(), [](Value b) { return b < 0; });
}

}  // namespace

std::optional<Value> MaxValue(const LiftingSubproblem& problem, std::optional<Value> cap) {
  if (Infeasible(problem)) return std::nullopt;
  std::vector<int> all(problem.size());
  std::iota(all.begin(), all.end(), 0);
  BranchAndBound search(problem, all, problem.reduced_rhs, cap.value_or(kNoCap));
  return search.Run();
}

std::optional<SubproblemSolution> Solve(const LiftingSubproblem& problem) {
  if (Infeasible(problem)) return std::nullopt;
  const int n = problem.size();
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  const Value optimum = BranchAndBound(problem, all, problem.reduced_rhs, kNoCap).Run();

  // Build the witness greedily in ascending column order: take a variable
  // when the rest (higher columns only) can still complete an optimum.
  std::vector<int> by_column;
  for (int v = 0; v < n; ++v) {
    if (problem.weights[v] > 0) by_column.push_back(v);
  }
  std::sort(by_column.begin(), by_column.end(), [&](int x, int y) {
    return problem.variables[x] != problem.variables[y] ? problem.variables[x] < problem.variables[y] : x < y;
  });

  SubproblemSolution solution;
  std::vector<Value> room = problem.reduced_rhs;
  Value collected = 0;
  for (std::size_t k = 0; k < by_column.size() && collected < optimum; ++k) {
    const int v = by_column[k];
    bool fits = true;
    for (int j = 0; j < problem.rows && fits; ++j) fits = problem.demand(j, v) <= room[j];
    if (!fits) continue;
    std::vector<Value> rest_room = room;
    for (int j = 0; j < problem.rows; ++j) rest_room[j] -= problem.demand(j, v);
    const std::span<const int> later(by_column.data() + k + 1, by_column.size() - k - 1);
    const Value need = optimum - collected - problem.weights[v];
    const Value rest = need > 0 ? BranchAndBound(problem, later, rest_room, need).Run() : 0;
    if (rest >= need) {
      solution.witness.push_back(problem.variables[v]);
      collected += problem.weights[v];
      room = std::move(rest_room);
    }
  }
  solution.value = optimum;
  return solution;
}

}  // namespace cumlift
