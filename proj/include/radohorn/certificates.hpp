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

#ifndef RADOHORN_CERTIFICATES_HPP_
#define RADOHORN_CERTIFICATES_HPP_

#include <optional>
#include <vector>

#include "radohorn/fundamental.hpp"

namespace radohorn {

struct ScreenResult {
  bool clean = true;
  IndexSet zero_indices;
};

enum class Verdict { kSatisfiable, kViolated };

struct RadoHornCertificate {
  Verdict verdict = Verdict::kSatisfiable;
  int k = 0;
  std::optional<IndexSet> witness_subset;
  std::optional<Rational> ratio;
  std::optional<OrderedPartition> partition;
  // Violated instances embed the transversal behind the exact
  // k + 1/dim span(T) decomposition, plus the anchor completing J.
  std::optional<Transversal> transversal;
  std::optional<int> anchor;
};

struct RedundantWitness {
  std::vector<IndexSet> blocks;               // k blocks; the last one may be dependent
  std::vector<RationalVector> subspace_basis; // basis of the common subspace S
  std::vector<IndexSet> slices;               // S_i, one per block, each spanning S
  IndexSet saturated;                         // J: every index whose vector lies in S
  Rational ratio;                             // |J| / dim S
  bool merged_all_anchors = true;
  // Conditions (i)-(iii), re-verified by direct rank computation.
  bool slices_span_subspace = false;
  bool ratio_exceeds_k = false;
  bool residuals_independent = false;
};

struct RemovalReport {
  int k = 0;
  int l = 0;
  bool feasible = false;
  std::optional<IndexSet> removed;  // |removed| = l exactly
  std::optional<IndexSet> witness;
  std::optional<Rational> ratio;    // (|J| - l) / dim span(J)
};

struct SpanningSummary {
  int total_dim = 0;
  int max_spanning_sets = 0;
};

// Zero vectors belong to no independent set; everything downstream requires
// a clean family.
ScreenResult screen_zero_vectors(const VectorFamily& family);

// Inequality side of the theorem: violated iff some subset has
// |J| / dim span(J) > k; the witness is the max-ratio subset.
RadoHornCertificate check_inequality(const VectorFamily& family, int k);

// Constructive side: ships the fundamental partition when it has at most k
// blocks; otherwise a violated certificate whose ratio is exactly
// k + 1/dim span(T) for a k-transversal T anchored in the last block.
RadoHornCertificate partition_into_k(const VectorFamily& family, int k);

// Removal variant: feasible iff the fundamental tail past block k has at
// most l elements. Feasible reports a removed set of size exactly l (tail
// first, topped up with highest indices of the preceding blocks); infeasible
// reports J with (|J| - l)/dim span(J) > k.
RemovalReport generalized_check(const VectorFamily& family, int k, int l);

// Redundancy witness for families that do not partition into k independent
// sets: blocks (F_1,...,F_{k-1}, F_k u ... u F_l), a merged k-transversal
// over tail anchors, slices per block (the last slice absorbs the tail so
// every residual stays independent), and the saturated set. With
// merge_all_anchors false only the least anchor of block k+1 is used; the
// span conditions may then genuinely fail and are reported as found.
RedundantWitness redundant_witness(const VectorFamily& family, int k,
                                   bool merge_all_anchors = true);

// Closing remark bookkeeping: total dimension spanned and the maximum
// number of spanning sets any partition can carry.
SpanningSummary spanning_summary(const VectorFamily& family);

}  // namespace radohorn

#endif  // RADOHORN_CERTIFICATES_HPP_
