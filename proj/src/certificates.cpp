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

#include "radohorn/certificates.hpp"

#include <string>

#include "radohorn/errors.hpp"
#include "radohorn/linalg.hpp"

namespace radohorn {

namespace {

void require_clean(const VectorFamily& family) {
  const ScreenResult screen = screen_zero_vectors(family);
  if (!screen.clean) {
    throw DegenerateFamilyError("family contains zero vectors", screen.zero_indices);
  }
}

void require_positive_k(int k) {
  if (k < 1) throw Error("k must be positive, got " + std::to_string(k));
}

// Merged k-transversal over the given anchors (all in blocks past k).
Transversal merged_transversal(const VectorFamily& family, const OrderedPartition& partition,
                               int k, const IndexSet& anchors) {
  std::optional<Transversal> merged;
  for (int anchor : anchors) {
    Transversal next = find_transversal(family, partition, k, anchor);
    merged = merged ? merge_transversals(*merged, next) : std::move(next);
  }
  if (!merged) throw Error("internal: no anchors for transversal merge");
  return *merged;
}

}  // namespace

ScreenResult screen_zero_vectors(const VectorFamily& family) {
  ScreenResult result;
  for (int i = 1; i <= family.size(); ++i) {
    if (family.vector(i).is_zero()) result.zero_indices.insert(i);
  }
  result.clean = result.zero_indices.empty();
  return result;
}

RadoHornCertificate check_inequality(const VectorFamily& family, int k) {
  require_positive_k(k);
  require_clean(family);
  RadoHornCertificate cert;
  cert.k = k;
  if (family.size() == 0) {
    cert.verdict = Verdict::kSatisfiable;
    return cert;
  }
  MaxRatioResult mr = max_ratio_subset(family);
  if (mr.ratio > k) {
    cert.verdict = Verdict::kViolated;
    cert.witness_subset = std::move(mr.subset);
    cert.ratio = std::move(mr.ratio);
  } else {
    cert.verdict = Verdict::kSatisfiable;
  }
  return cert;
}

RadoHornCertificate partition_into_k(const VectorFamily& family, int k) {
  require_positive_k(k);
  require_clean(family);
  FundamentalResult fr = construct_fundamental(family);
  const int l = fr.partition.block_count();

  RadoHornCertificate cert;
  cert.k = k;
  if (l <= k) {
    cert.verdict = Verdict::kSatisfiable;
    cert.partition = std::move(fr.partition);
    return cert;
  }

  const int anchor = *fr.partition.blocks.back().begin();
  Transversal transversal = find_transversal(family, fr.partition, k, anchor);
  const int d = transversal.slice_rank();
  IndexSet witness = transversal.support();
  witness.insert(anchor);

  cert.verdict = Verdict::kViolated;
  cert.witness_subset = std::move(witness);
  cert.ratio = Rational(k * d + 1, d);  // == k + 1/dim span(T), exactly
  cert.partition = std::move(fr.partition);
  cert.transversal = std::move(transversal);
  cert.anchor = anchor;
  return cert;
}

RemovalReport generalized_check(const VectorFamily& family, int k, int l) {
  require_positive_k(k);
  require_clean(family);
  const int M = family.size();
  if (l < 0 || l > M) {
    throw Error("removal budget must satisfy 0 <= l <= family size, got " + std::to_string(l));
  }
  FundamentalResult fr = construct_fundamental(family);
  const std::vector<IndexSet>& blocks = fr.partition.blocks;
  const int block_count = fr.partition.block_count();

  IndexSet tail;
  for (int b = k; b < block_count; ++b) {
    tail.insert(blocks[static_cast<std::size_t>(b)].begin(),
                blocks[static_cast<std::size_t>(b)].end());
  }

  RemovalReport report;
  report.k = k;
  report.l = l;
  if (static_cast<int>(tail.size()) <= l) {
    report.feasible = true;
    IndexSet removed = std::move(tail);
    // Top up to exactly l, walking the surviving blocks backwards and taking
    // highest indices first.
    for (int b = std::min(k, block_count); b >= 1 && static_cast<int>(removed.size()) < l; --b) {
      const IndexSet& block = blocks[static_cast<std::size_t>(b) - 1];
      for (auto it = block.rbegin(); it != block.rend(); ++it) {
        if (static_cast<int>(removed.size()) == l) break;
        removed.insert(*it);
      }
    }
    report.removed = std::move(removed);
    return report;
  }

  report.feasible = false;
  const Transversal transversal =
      merged_transversal(family, fr.partition, k, blocks[static_cast<std::size_t>(k)]);
  IndexSet witness = transversal.support();
  witness.insert(tail.begin(), tail.end());
  report.ratio = Rational(static_cast<int>(witness.size()) - l, transversal.slice_rank());
  report.witness = std::move(witness);
  return report;
}

RedundantWitness redundant_witness(const VectorFamily& family, int k, bool merge_all_anchors) {
  require_positive_k(k);
  require_clean(family);
  FundamentalResult fr = construct_fundamental(family);
  const std::vector<IndexSet>& fblocks = fr.partition.blocks;
  const int block_count = fr.partition.block_count();
  if (block_count <= k) {
    throw Error("family partitions into " + std::to_string(k) +
                " independent sets; no redundant witness exists");
  }

  IndexSet tail;
  for (int b = k; b < block_count; ++b) {
    tail.insert(fblocks[static_cast<std::size_t>(b)].begin(),
                fblocks[static_cast<std::size_t>(b)].end());
  }

  IndexSet anchors;
  if (merge_all_anchors) {
    anchors = tail;
  } else {
    anchors.insert(*fblocks[static_cast<std::size_t>(k)].begin());
  }
  const Transversal transversal = merged_transversal(family, fr.partition, k, anchors);

  RedundantWitness witness;
  witness.merged_all_anchors = merge_all_anchors;
  for (int b = 0; b < k - 1; ++b) witness.blocks.push_back(fblocks[static_cast<std::size_t>(b)]);
  witness.blocks.push_back(set_union(fblocks[static_cast<std::size_t>(k) - 1], tail));

  witness.subspace_basis = family.vectors(transversal.slices[0]);

  witness.slices = transversal.slices;
  witness.slices.back() = set_union(witness.slices.back(), tail);

  for (int i = 1; i <= family.size(); ++i) {
    if (in_span(family.vector(i), witness.subspace_basis)) witness.saturated.insert(i);
  }
  const int dim_s = static_cast<int>(witness.subspace_basis.size());
  witness.ratio = Rational(static_cast<int>(witness.saturated.size()), dim_s);

  witness.slices_span_subspace = true;
  for (const IndexSet& slice : witness.slices) {
    if (!span_equal(family.vectors(slice), witness.subspace_basis)) {
      witness.slices_span_subspace = false;
      break;
    }
  }
  witness.ratio_exceeds_k = witness.ratio > k;
  witness.residuals_independent = true;
  for (std::size_t i = 0; i < witness.blocks.size(); ++i) {
    const IndexSet residual = set_difference(witness.blocks[i], witness.slices[i]);
    if (!is_independent(family.vectors(residual))) {
      witness.residuals_independent = false;
      break;
    }
  }
  return witness;
}

SpanningSummary spanning_summary(const VectorFamily& family) {
  require_clean(family);
  FundamentalResult fr = construct_fundamental(family);
  SpanningSummary summary;
  if (fr.trace.stages.empty()) return summary;
  for (const Stage& stage : fr.trace.stages) summary.total_dim += stage.t;
  const Stage& last = fr.trace.stages.back();
  summary.max_spanning_sets = last.s == last.t ? last.k : last.k - 1;
  return summary;
}

}  // namespace radohorn
