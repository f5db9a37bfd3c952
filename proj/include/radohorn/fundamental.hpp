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

#ifndef RADOHORN_FUNDAMENTAL_HPP_
#define RADOHORN_FUNDAMENTAL_HPP_

#include <utility>
#include <vector>

#include "radohorn/partition.hpp"
#include "radohorn/rational.hpp"

namespace radohorn {

// t index slices, one per leading block of a referenced partition, with
// pairwise equal spans. Every slice is a subset of an independent block, so
// all slices share one cardinality: the dimension of the common span.
struct Transversal {
  int t = 0;
  std::vector<IndexSet> slices;
  // Blocks of the partition the transversal was extracted from; merge
  // compatibility is checked against these.
  std::vector<IndexSet> blocks;

  // Dimension of the common span.
  int slice_rank() const { return slices.empty() ? 0 : static_cast<int>(slices[0].size()); }
  IndexSet support() const;
};

// Fixpoint record of the minimal-support iteration. sets holds one slice per
// block 1..l-1; carrier is the 1-based position of a maximal one.
struct ChainState {
  int step = 0;
  std::vector<IndexSet> sets;
  int carrier = 0;
};

// One stage of the projection construction. Indices are original family
// indices throughout; projected_family holds the stage's working vectors
// renumbered 1..m with original labels, and snapshot_indices maps its
// positions back to original indices.
struct Stage {
  IndexSet transversal;
  std::vector<IndexSet> slices;
  int t = 0;
  int k = 0;
  int s = 0;
  VectorFamily projected_family;
  std::vector<int> snapshot_indices;
  // Transversals absorbed into this stage by the merge rule, in merge order.
  std::vector<IndexSet> merged;
};

struct StageTrace {
  std::vector<Stage> stages;
};

struct FundamentalResult {
  OrderedPartition partition;
  StageTrace trace;
  // block_cells[i] lists, in stage order, (stage number, cell count) pairs
  // describing how block i+1 of the partition was assembled; used for
  // annotated diagrams.
  std::vector<std::vector<std::pair<int, int>>> block_cells;
};

struct MaxRatioResult {
  IndexSet subset;
  Rational ratio;
};

// The unique minimal S inside the independent block with
// span(targets) <= span(S): the union of expansion supports. Raises
// DependentSetError for a dependent block and OutOfSpanError when some
// target vector escapes the block's span.
IndexSet minimal_support(const VectorFamily& family, const IndexSet& target_span_generators,
                         const IndexSet& within_block);

// Iterates minimal supports of a seed from the last block across blocks
// 1..l-1 until the maximal set size stabilizes; at the fixpoint all sets are
// pairwise span-equal. Raises Error when the partition has a single block or
// the seed is not in the last block.
ChainState build_chain(const VectorFamily& family, const OrderedPartition& partition, int seed);

// Extracts a t-transversal of the first t blocks whose common span contains
// the anchor vector. The anchor must sit in a block strictly after position
// t. The partition is assumed fundamental; on other inputs the chain may
// legitimately fail with OutOfSpanError.
Transversal find_transversal(const VectorFamily& family, const OrderedPartition& partition, int t,
                             int anchor);

// Slice-wise union per the transversal-union lemma. Requires equal t and
// identical underlying blocks; the result is validated to be span-equal
// slice-wise.
Transversal merge_transversals(const Transversal& a, const Transversal& b);

// A span-closed J maximizing |J| / dim span(J). Ties: largest |J| first,
// then lexicographically smallest index set. Requires a nonempty family
// with no zero vectors.
MaxRatioResult max_ratio_subset(const VectorFamily& family);

// The staged projection construction: per stage take the max-ratio subset
// of the projected family, record (t, k, s), slice it into k-1 common-span
// slices plus an independent remainder, merge with the previous stage when
// the k values coincide, project the rest, and recurse. Blocks are
// reassembled as the slice-wise unions across stages.
FundamentalResult construct_fundamental(const VectorFamily& family);

// Rebuilds a standalone family from a stage snapshot (labels preserved,
// indices renumbered 1..m).
VectorFamily snapshot_family(const Stage& stage);

struct FundamentalCheck {
  bool fundamental = false;
  // True when decided by full enumeration; false when only the transversal
  // certificate was checked.
  bool exhaustive = false;
};

// For M <= exhaustive_limit compares against every enumerated independent
// partition (majorization); above that checks validity plus transversal
// existence for every (t, anchor) pair.
FundamentalCheck is_fundamental_detail(const VectorFamily& family,
                                       const OrderedPartition& partition,
                                       int exhaustive_limit = 9);
bool is_fundamental(const VectorFamily& family, const OrderedPartition& partition);

}  // namespace radohorn

#endif  // RADOHORN_FUNDAMENTAL_HPP_
