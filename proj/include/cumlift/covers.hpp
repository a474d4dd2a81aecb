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

// Seed cover enumeration: short covers (pairs, and pairs completed by the
// longest eligible third task) and long uniform-demand covers per row.

#pragma once

#include <cstddef>
#include <span>
#include <unordered_set>
#include <vector>

#include "cumlift/instance.hpp"
#include "cumlift/polyhedral.hpp"

namespace cumlift {

/// Covers in generation order with duplicate member sets dropped; the first
/// occurrence keeps its row and rule.
class CoverBatch {
 public:
  /// Returns false if a cover with the same members is already present.
  bool Add(Cover cover);
  void Append(const CoverBatch& other);

  const std::vector<Cover>& covers() const { return covers_; }
  std::size_t size() const { return covers_.size(); }
  bool empty() const { return covers_.empty(); }
  std::size_t Count(GenerationRule rule) const;

 private:
  struct Hash {
    std::size_t operator()(const std::vector<Column>& members) const;
  };
  std::vector<Cover> covers_;
  std::unordered_set<std::vector<Column>, Hash> seen_;
};

struct ShortCoverOptions {
  bool ternary = true;
};

/// Every covering pair of every row, plus {i, j, k(i, j)} for each
/// non-covering pair where k(i, j) is the longest task (lowest column on
/// ties) outside {i, j} whose demand exceeds the pair's residual capacity.
CoverBatch EnumerateShortCovers(const DemandSystem& system, ShortCoverOptions options = {});

/// For every row and demand value v > 0 with at least k = floor(b / v) + 1
/// tasks of that demand, the k longest and the k shortest of them.
CoverBatch EnumerateLongCovers(const DemandSystem& system);

/// Capacity bound of the cover inequality x(C) <= |C| - 1.
Rational CoverCapacityBound(const Cover& cover, std::span<const Value> durations);

/// Short covers sorted by descending capacity bound (stable), truncated to
/// `limit`, followed by all long covers in generation order.
std::vector<Cover> SelectTopCovers(const CoverBatch& batch, std::span<const Value> durations, std::size_t limit);

}  // namespace cumlift
