// Copyright 2026 The Authors.
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

#include "radohorn/oracle.hpp"

#include <algorithm>
#include <string>

#include "radohorn/errors.hpp"
#include "radohorn/linalg.hpp"

namespace radohorn {

namespace {

void require_clean(const VectorFamily& family) {
  IndexSet zeros;
  for (int i = 1; i <= family.size(); ++i) {
    if (family.vector(i).is_zero()) zeros.insert(i);
  }
  if (!zeros.empty()) {
    throw DegenerateFamilyError("family contains zero vectors", zeros);
  }
}

void require_enumeration_budget(const VectorFamily& family, const OracleBudget& budget) {
  if (family.size() > budget.max_family_size) {
    throw BudgetError("family size " + std::to_string(family.size()) +
                      " exceeds enumeration budget " + std::to_string(budget.max_family_size));
  }
}

}  // namespace

std::vector<OrderedPartition> enumerate_independent_partitions(const VectorFamily& family,
                                                               const OracleBudget& budget) {
  require_enumeration_budget(family, budget);
  require_clean(family);

  // Restricted-growth enumeration: element i joins an existing block or
  // opens the next one, so every unordered set partition appears once.
  std::vector<OrderedPartition> results;
  std::vector<std::vector<int>> blocks;
  auto recurse = [&](auto&& self, int i) -> void {
    if (i > family.size()) {
      std::vector<IndexSet> sets;
      sets.reserve(blocks.size());
      for (const std::vector<int>& b : blocks) sets.emplace_back(b.begin(), b.end());
      results.push_back(canonical_partition(std::move(sets)));
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      std::vector<RationalVector> vs;
      vs.reserve(blocks[b].size());
      for (int j : blocks[b]) vs.push_back(family.vector(j));
      if (in_span(family.vector(i), vs)) continue;  // block stays independent otherwise
      blocks[b].push_back(i);
      self(self, i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({i});
    self(self, i + 1);
    blocks.pop_back();
  };
  recurse(recurse, 1);
  return results;
}

OrderedPartition oracle_fundamental(const VectorFamily& family, const OracleBudget& budget) {
  const std::vector<OrderedPartition> all = enumerate_independent_partitions(family, budget);
  const OrderedPartition* best = nullptr;
  for (const OrderedPartition& p : all) {
    if (best == nullptr) {
      best = &p;
      continue;
    }
    const std::vector<int>& bs = best->profile().sizes;
    const std::vector<int>& ps = p.profile().sizes;
    if (ps > bs || (ps == bs && p.blocks < best->blocks)) best = &p;
  }
  if (best == nullptr) return OrderedPartition{};
  return *best;
}

MaxRatioResult oracle_max_ratio(const VectorFamily& family, const OracleBudget& budget) {
  if (family.size() > budget.max_subset_scan) {
    throw BudgetError("family size " + std::to_string(family.size()) +
                      " exceeds subset scan budget " + std::to_string(budget.max_subset_scan));
  }
  require_clean(family);
  if (family.size() == 0) {
    throw Error("max ratio subset of an empty family");
  }

  MaxRatioResult best;
  bool found = false;
  IndexSet selected;
  std::vector<RationalVector> basis;
  auto recurse = [&](auto&& self, int i) -> void {
    if (i > family.size()) {
      if (selected.empty()) return;
      const Rational ratio(static_cast<int>(selected.size()), static_cast<int>(basis.size()));
      const bool better = !found || ratio > best.ratio ||
                          (ratio == best.ratio && selected.size() > best.subset.size()) ||
                          (ratio == best.ratio && selected.size() == best.subset.size() &&
                           selected < best.subset);
      if (better) {
        best = {selected, ratio};
        found = true;
      }
      return;
    }
    self(self, i + 1);
    selected.insert(i);
    if (in_span(family.vector(i), basis)) {
      self(self, i + 1);
    } else {
      basis.push_back(family.vector(i));
      self(self, i + 1);
      basis.pop_back();
    }
    selected.erase(i);
  };
  recurse(recurse, 1);
  return best;
}

int oracle_min_parts(const VectorFamily& family, const OracleBudget& budget) {
  require_enumeration_budget(family, budget);
  require_clean(family);
  const int M = family.size();
  if (M == 0) return 0;

  int best = M;  // singletons of a clean family are independent
  std::vector<std::vector<int>> blocks;
  auto recurse = [&](auto&& self, int i) -> void {
    if (static_cast<int>(blocks.size()) >= best) return;
    if (i > M) {
      best = static_cast<int>(blocks.size());
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      std::vector<RationalVector> vs;
      vs.reserve(blocks[b].size());
      for (int j : blocks[b]) vs.push_back(family.vector(j));
      if (in_span(family.vector(i), vs)) continue;
      blocks[b].push_back(i);
      self(self, i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({i});
    self(self, i + 1);
    blocks.pop_back();
  };
  recurse(recurse, 1);
  return best;
}

}  // namespace radohorn
