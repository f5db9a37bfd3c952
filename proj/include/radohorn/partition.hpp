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

#ifndef RADOHORN_PARTITION_HPP_
#define RADOHORN_PARTITION_HPP_

#include <string>
#include <vector>

#include "radohorn/family.hpp"

namespace radohorn {

// Block sizes of an ordered partition, weakly decreasing when canonical.
struct PartitionProfile {
  std::vector<int> sizes;

  int total() const;
  bool operator==(const PartitionProfile& other) const = default;
};

// Ordered set partition of family indices. Canonical order is by size
// descending, ties by smallest member ascending.
struct OrderedPartition {
  std::vector<IndexSet> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  PartitionProfile profile() const;
  IndexSet support() const;
  // 1-based position of the block containing index, 0 if absent.
  int block_of(int index) const;

  bool operator==(const OrderedPartition& other) const = default;
};

// Sorts blocks into canonical order. Blocks must be nonempty and pairwise
// disjoint; violations raise Error.
OrderedPartition canonical_partition(std::vector<IndexSet> blocks);

struct ValidationReport {
  bool blocks_nonempty = true;
  bool indices_in_range = true;
  bool disjoint = true;
  bool covers = true;        // union of blocks == {1, ..., M}
  bool sizes_ordered = true;
  std::vector<int> dependent_blocks;  // 1-based positions of dependent blocks
  std::vector<std::string> issues;

  bool valid() const {
    return blocks_nonempty && indices_in_range && disjoint && covers && sizes_ordered &&
           dependent_blocks.empty();
  }
};

// Structural and linear-algebra checks for "partition of the family into
// linearly independent sets, canonically ordered". Failures are report
// content, not faults.
ValidationReport validate_ordered(const VectorFamily& family, const OrderedPartition& partition);

// Majorization order on profiles with equal totals: every prefix sum of p is
// >= the matching prefix sum of q (shorter profile padded with zeros).
// Differing totals raise Error.
bool majorizes(const PartitionProfile& p, const PartitionProfile& q);

// Steinitz exchange inside one independent block: returns
// (block u {incoming}) \ {pivot}. Legal when the expansion of the incoming
// vector over the block has a nonzero coefficient at pivot; the result is
// then independent and spans the same subspace. Raises Error for membership
// violations, DependentSetError for a dependent block, OutOfSpanError when
// the incoming vector is outside the block's span, and ZeroPivotError when
// the exchange coefficient vanishes.
IndexSet exchange(const VectorFamily& family, const IndexSet& block, int incoming, int pivot);

}  // namespace radohorn

#endif  // RADOHORN_PARTITION_HPP_
