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

#include "cumlift/covers.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <utility>

namespace cumlift {

std::size_t CoverBatch::Hash::operator()(const std::vector<Column>& members) const {
  std::size_t h = members.size();
  for (Column c : members) h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool CoverBatch::Add(Cover cover) {
  if (!seen_.insert(cover.members).second) return false;
  covers_.push_back(std::move(cover));
  return true;
}

void CoverBatch::Append(const CoverBatch& other) {
  for (const Cover& cover : other.covers_) Add(cover);
}

std::size_t CoverBatch::Count(GenerationRule rule) const {
  return static_cast<std::size_t>(
      std::count_if(covers_.begin(), covers_.end(), [rule](const Cover& c) { return c.rule == rule; }));
}

namespace {

// Up to three columns, best first: longest duration, then lowest index.
struct TopThree {
  std::array<Column, 3> cols{-1, -1, -1};

  void Offer(Column c, std::span<const Value> durations) {
    auto better = [&](Column x, Column y) {
      if (y < 0) return true;
      return durations[x] != durations[y] ? durations[x] > durations[y] : x < y;
    };
    for (int s = 0; s < 3; ++s) {
      if (better(c, cols[s])) {
        for (int t = 2; t > s; --t) cols[t] = cols[t - 1];
        cols[s] = c;
        return;
      }
    }
  }
};

}  // namespace

CoverBatch EnumerateShortCovers(const DemandSystem& system, ShortCoverOptions options) {
  CoverBatch batch;
  const int n = system.cols();
  const auto durations = std::span<const Value>(system.durations());
  for (int r = 0; r < system.rows(); ++r) {
    const auto a = system.row(r);
    const Value b = system.rhs(r);

    // Columns by descending demand; the tasks with demand > t form a prefix.
    std::vector<Column> by_demand(n);
    std::iota(by_demand.begin(), by_demand.end(), 0);
    std::stable_sort(by_demand.begin(), by_demand.end(), [&](Column x, Column y) { return a[x] > a[y]; });
    std::vector<Value> sorted_demand(n);
    for (int p = 0; p < n; ++p) sorted_demand[p] = a[by_demand[p]];
    // best[p] = best three among the first p columns of by_demand.
    std::vector<TopThree> best(n + 1);
    for (int p = 0; p < n; ++p) {
      best[p + 1] = best[p];
      best[p + 1].Offer(by_demand[p], durations);
    }

    for (Column i = 0; i < n; ++i) {
      for (Column j = i + 1; j < n; ++j) {
        const Value pair = a[i] + a[j];
        if (pair > b) {
          batch.Add(Cover{{i, j}, r, GenerationRule::kBinary});
          continue;
        }
        if (!options.ternary) continue;
        const Value residual = b - pair;
        const auto prefix = std::upper_bound(sorted_demand.begin(), sorted_demand.end(), residual,
                                             [](Value t, Value v) { return v <= t; }) -
                            sorted_demand.begin();
        for (Column k : best[prefix].cols) {
          if (k < 0) break;
          if (k == i || k == j) continue;
          std::vector<Column> members{i, j, k};
          std::sort(members.begin(), members.end());
          batch.Add(Cover{std::move(members), r, GenerationRule::kTernary});
          break;
        }
      }
    }
  }
  return batch;
}

CoverBatch EnumerateLongCovers(const DemandSystem& system) {
  CoverBatch batch;
  const auto& d = system.durations();
  for (int r = 0; r < system.rows(); ++r) {
    const auto a = system.row(r);
    const Value b = system.rhs(r);
    std::map<Value, std::vector<Column>> groups;
    for (Column c = 0; c < system.cols(); ++c) {
      if (a[c] > 0) groups[a[c]].push_back(c);
    }
    for (auto& [v, group] : groups) {
      const Value k = b / v + 1;
      if (k < 2 || static_cast<Value>(group.size()) < k) continue;
      auto take = [&](auto before) {
        std::vector<Column> ordered = group;
        std::stable_sort(ordered.begin(), ordered.end(), before);
        std::vector<Column> members(ordered.begin(), ordered.begin() + k);
        std::sort(members.begin(), members.end());
        return members;
      };
      batch.Add(Cover{take([&](Column x, Column y) { return d[x] > d[y]; }), r, GenerationRule::kLongMax});
      batch.Add(Cover{take([&](Column x, Column y) { return d[x] < d[y]; }), r, GenerationRule::kLongMin});
    }
  }
  return batch;
}

Rational CoverCapacityBound(const Cover& cover, std::span<const Value> durations) {
  Value total = 0;
  for (Column c : cover.members) total += durations[c];
  return Rational(total, static_cast<Value>(cover.members.size()) - 1);
}

std::vector<Cover> SelectTopCovers(const CoverBatch& batch, std::span<const Value> durations, std::size_t limit) {
  const auto& all = batch.covers();
  std::vector<std::pair<Rational, std::size_t>> ranked;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (IsShort(all[k].rule)) ranked.emplace_back(CoverCapacityBound(all[k], durations), k);
  }
  // Descending bound, generation order on ties.
  auto before = [](const auto& x, const auto& y) { return x.first != y.first ? x.first > y.first : x.second < y.second; };
  const std::size_t keep = std::min(limit, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(keep), ranked.end(), before);

  std::vector<Cover> selected;
  for (std::size_t k = 0; k < keep; ++k) selected.push_back(all[ranked[k].second]);
  for (const Cover& cover : all) {
    if (!IsShort(cover.rule)) selected.push_back(cover);
  }
  return selected;
}

}  // namespace cumlift
