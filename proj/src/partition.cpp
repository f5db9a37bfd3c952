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

#include "radohorn/partition.hpp"

#include <algorithm>
#include <numeric>

#include "radohorn/errors.hpp"
#include "radohorn/linalg.hpp"

namespace radohorn {

int PartitionProfile::total() const {
  return std::accumulate(sizes.begin(), sizes.end(), 0);
}

PartitionProfile OrderedPartition::profile() const {
  PartitionProfile p;
  p.sizes.reserve(blocks.size());
  for (const IndexSet& b : blocks) p.sizes.push_back(static_cast<int>(b.size()));
  return p;
}

IndexSet OrderedPartition::support() const {
  IndexSet out;
  for (const IndexSet& b : blocks) out.insert(b.begin(), b.end());
  return out;
}

int OrderedPartition::block_of(int index) const {
  for (int i = 0; i < block_count(); ++i) {
    if (blocks[static_cast<std::size_t>(i)].count(index) > 0) return i + 1;
  }
  return 0;
}

OrderedPartition canonical_partition(std::vector<IndexSet> blocks) {
  std::size_t total = 0;
  IndexSet seen;
  for (const IndexSet& b : blocks) {
    if (b.empty()) throw Error("partition blocks must be nonempty");
    total += b.size();
    seen.insert(b.begin(), b.end());
  }
  if (seen.size() != total) throw Error("partition blocks must be pairwise disjoint");
  std::sort(blocks.begin(), blocks.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return *a.begin() < *b.begin();
  });
  return OrderedPartition{std::move(blocks)};
}

ValidationReport validate_ordered(const VectorFamily& family, const OrderedPartition& partition) {
  ValidationReport report;
  const int M = family.size();

  std::size_t total = 0;
  IndexSet seen;
  for (const IndexSet& b : partition.blocks) {
    if (b.empty()) {
      report.blocks_nonempty = false;
      report.issues.push_back("empty block");
    }
    for (int i : b) {
      if (i < 1 || i > M) {
        report.indices_in_range = false;
        report.issues.push_back("index out of range: " + std::to_string(i));
      }
    }
    total += b.size();
    seen.insert(b.begin(), b.end());
  }
  if (seen.size() != total) {
    report.disjoint = false;
    report.issues.push_back("blocks overlap");
  }
  if (report.indices_in_range && static_cast<int>(seen.size()) != M) {
    report.covers = false;
    report.issues.push_back("blocks do not cover the family");
  }

  for (int i = 1; i < partition.block_count(); ++i) {
    const IndexSet& prev = partition.blocks[static_cast<std::size_t>(i - 1)];
    const IndexSet& cur = partition.blocks[static_cast<std::size_t>(i)];
    if (prev.empty() || cur.empty()) continue;
    const bool ordered = prev.size() > cur.size() ||
                         (prev.size() == cur.size() && *prev.begin() < *cur.begin());
    if (!ordered) {
      report.sizes_ordered = false;
      report.issues.push_back("blocks out of canonical order at position " + std::to_string(i + 1));
      break;
    }
  }

  if (report.indices_in_range) {
    for (int i = 0; i < partition.block_count(); ++i) {
      if (!is_independent(family.vectors(partition.blocks[static_cast<std::size_t>(i)]))) {
        report.dependent_blocks.push_back(i + 1);
        report.issues.push_back("block " + std::to_string(i + 1) + " is dependent");
      }
    }
  }
  return report;
}

bool majorizes(const PartitionProfile& p, const PartitionProfile& q) {
  if (p.total() != q.total()) {
    throw Error("majorization requires equal totals: " + std::to_string(p.total()) + " vs " +
                std::to_string(q.total()));
  }
  const std::size_t n = std::max(p.sizes.size(), q.sizes.size());
  int sum_p = 0;
  int sum_q = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sum_p += i < p.sizes.size() ? p.sizes[i] : 0;
    sum_q += i < q.sizes.size() ? q.sizes[i] : 0;
    if (sum_p < sum_q) return false;
  }
  return true;
}

IndexSet exchange(const VectorFamily& family, const IndexSet& block, int incoming, int pivot) {
  if (block.count(incoming) > 0) {
    throw Error("incoming index already in block: " + std::to_string(incoming));
  }
  if (block.count(pivot) == 0) {
    throw Error("pivot index not in block: " + std::to_string(pivot));
  }
  const std::vector<RationalVector> basis = family.vectors(block);
  if (!is_independent(basis)) {
    throw DependentSetError("exchange requires an independent block");
  }
  const std::vector<Rational> coefficients =
      expansion_coefficients(family.vector(incoming), basis);
  const std::vector<int> order = to_sorted_vector(block);
  const auto pos = std::find(order.begin(), order.end(), pivot) - order.begin();
  if (coefficients[static_cast<std::size_t>(pos)] == 0) {
    throw ZeroPivotError("exchange coefficient at index " + std::to_string(pivot) + " is zero");
  }
  IndexSet result = block;
  result.erase(pivot);
  result.insert(incoming);
  return result;
}

}  // namespace radohorn
