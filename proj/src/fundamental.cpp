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

#include "radohorn/fundamental.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "radohorn/errors.hpp"
#include "radohorn/linalg.hpp"
#include "radohorn/oracle.hpp"

namespace radohorn {

namespace {

struct WorkingEntry {
  int index;  // original family index
  RationalVector vector;
};
using Working = std::vector<WorkingEntry>;

const RationalVector& working_vector(const Working& w, int index) {
  for (const WorkingEntry& e : w) {
    if (e.index == index) return e.vector;
  }
  throw Error("internal: index " + std::to_string(index) + " missing from working family");
}

std::vector<RationalVector> working_vectors(const Working& w, const IndexSet& indices) {
  std::vector<RationalVector> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(working_vector(w, i));
  return out;
}

VectorFamily working_family(const VectorFamily& original, const Working& w) {
  std::vector<FamilyEntry> entries;
  entries.reserve(w.size());
  for (const WorkingEntry& e : w) entries.push_back({original.label(e.index), e.vector});
  return VectorFamily(original.dimension(), std::move(entries));
}

// Lexicographic backtracking slice assembly: the first k-1 slices are bases
// of the pool's span (size t), chosen lexicographically least among choices
// that leave a decomposable rest; the final slice is the remainder and must
// be independent. Greedy basis extraction is not enough: leftovers can end
// up dependent even though a decomposition exists.
bool choose_slice(const Working& w, const std::vector<int>& remaining, std::size_t start,
                  int t, int s, int slices_left, std::vector<int>& chosen,
                  std::vector<RationalVector>& chosen_vectors, std::vector<IndexSet>& out);

bool assemble_rest(const Working& w, const std::vector<int>& remaining, int t, int s,
                   int slices_left, std::vector<IndexSet>& out) {
  if (slices_left == 1) {
    std::vector<RationalVector> vs;
    vs.reserve(remaining.size());
    for (int i : remaining) vs.push_back(working_vector(w, i));
    if (static_cast<int>(remaining.size()) != s || !is_independent(vs)) return false;
    out.emplace_back(remaining.begin(), remaining.end());
    return true;
  }
  std::vector<int> chosen;
  std::vector<RationalVector> chosen_vectors;
  return choose_slice(w, remaining, 0, t, s, slices_left, chosen, chosen_vectors, out);
}

bool choose_slice(const Working& w, const std::vector<int>& remaining, std::size_t start,
                  int t, int s, int slices_left, std::vector<int>& chosen,
                  std::vector<RationalVector>& chosen_vectors, std::vector<IndexSet>& out) {
  if (static_cast<int>(chosen.size()) == t) {
    std::vector<int> rest;
    rest.reserve(remaining.size() - chosen.size());
    std::set_difference(remaining.begin(), remaining.end(), chosen.begin(), chosen.end(),
                        std::back_inserter(rest));
    out.emplace_back(chosen.begin(), chosen.end());
    if (assemble_rest(w, rest, t, s, slices_left - 1, out)) return true;
    out.pop_back();
    return false;
  }
  const std::size_t needed = static_cast<std::size_t>(t) - chosen.size();
  for (std::size_t pos = start; pos + needed <= remaining.size(); ++pos) {
    const int candidate = remaining[pos];
    if (in_span(working_vector(w, candidate), chosen_vectors)) continue;
    chosen.push_back(candidate);
    chosen_vectors.push_back(working_vector(w, candidate));
    if (choose_slice(w, remaining, pos + 1, t, s, slices_left, chosen, chosen_vectors, out)) {
      return true;
    }
    chosen.pop_back();
    chosen_vectors.pop_back();
  }
  return false;
}

Stage make_stage(const VectorFamily& original, const Working& w, const IndexSet& transversal,
                 std::vector<IndexSet> merged) {
  const std::vector<RationalVector> tv = working_vectors(w, transversal);
  const int t = rank(tv);
  const int m = static_cast<int>(transversal.size());
  const int k = (m + t - 1) / t;
  const int s = m - (k - 1) * t;

  std::vector<IndexSet> slices;
  const std::vector<int> pool = to_sorted_vector(transversal);
  if (!assemble_rest(w, pool, t, s, k, slices)) {
    throw Error("internal: stage transversal admits no slice decomposition");
  }

  std::vector<int> snapshot_indices;
  snapshot_indices.reserve(w.size());
  for (const WorkingEntry& e : w) snapshot_indices.push_back(e.index);

  return Stage{transversal, std::move(slices), t,
               k,           s,                 working_family(original, w),
               std::move(snapshot_indices),    std::move(merged)};
}

Working project_residual(const Working& w, const IndexSet& transversal) {
  const std::vector<RationalVector> tv = working_vectors(w, transversal);
  Working next;
  next.reserve(w.size() - transversal.size());
  for (const WorkingEntry& e : w) {
    if (transversal.count(e.index) > 0) continue;
    RationalVector projected = project_complement(e.vector, tv);
    if (projected.is_zero()) {
      throw Error("internal: vector " + std::to_string(e.index) +
                  " projected to zero past a span-closed maximizer");
    }
    next.push_back({e.index, std::move(projected)});
  }
  return next;
}

Working rebuild_working(const Stage& stage) {
  Working w;
  w.reserve(stage.snapshot_indices.size());
  for (std::size_t p = 0; p < stage.snapshot_indices.size(); ++p) {
    w.push_back({stage.snapshot_indices[p],
                 stage.projected_family.vector(static_cast<int>(p) + 1)});
  }
  return w;
}

}  // namespace

IndexSet Transversal::support() const {
  IndexSet out;
  for (const IndexSet& s : slices) out.insert(s.begin(), s.end());
  return out;
}

IndexSet minimal_support(const VectorFamily& family, const IndexSet& target_span_generators,
                         const IndexSet& within_block) {
  const std::vector<RationalVector> basis = family.vectors(within_block);
  const std::vector<int> order = to_sorted_vector(within_block);
  IndexSet support;
  for (int target : target_span_generators) {
    const std::vector<Rational> coefficients =
        expansion_coefficients(family.vector(target), basis);
    for (std::size_t p = 0; p < coefficients.size(); ++p) {
      if (coefficients[p] != 0) support.insert(order[p]);
    }
  }
  return support;
}

ChainState build_chain(const VectorFamily& family, const OrderedPartition& partition, int seed) {
  const int l = partition.block_count();
  if (l < 2) {
    throw Error("chain construction requires at least two blocks");
  }
  if (partition.blocks.back().count(seed) == 0) {
    throw Error("seed " + std::to_string(seed) + " is not in the last block");
  }

  IndexSet current{seed};
  int step = 0;
  while (true) {
    ++step;
    std::vector<IndexSet> sets;
    sets.reserve(static_cast<std::size_t>(l) - 1);
    std::size_t best = 0;
    int carrier = 1;
    for (int i = 0; i < l - 1; ++i) {
      sets.push_back(minimal_support(family, current, partition.blocks[static_cast<std::size_t>(i)]));
      if (sets.back().size() > best) {
        best = sets.back().size();
        carrier = i + 1;
      }
    }
    // Sizes only grow: |S_i| >= dim span(current) = |current|. Equality at
    // the maximum forces every slice span equal to span(current).
    if (best == current.size()) {
      return ChainState{step, std::move(sets), carrier};
    }
    if (step > family.size() + 1) {
      throw Error("internal: chain failed to stabilize");
    }
    current = sets[static_cast<std::size_t>(carrier) - 1];
  }
}

Transversal find_transversal(const VectorFamily& family, const OrderedPartition& partition, int t,
                             int anchor) {
  const int l = partition.block_count();
  if (t < 1 || t >= l) {
    throw Error("transversal width t must satisfy 1 <= t < block count");
  }
  const int anchor_block = partition.block_of(anchor);
  if (anchor_block == 0) {
    throw Error("anchor " + std::to_string(anchor) + " is not covered by the partition");
  }
  if (anchor_block <= t) {
    throw Error("anchor must lie in a block after position t");
  }

  std::vector<IndexSet> reduced(partition.blocks.begin(), partition.blocks.begin() + t);
  reduced.push_back(partition.blocks[static_cast<std::size_t>(anchor_block) - 1]);
  const ChainState chain = build_chain(family, OrderedPartition{std::move(reduced)}, anchor);

  Transversal out{t, chain.sets, partition.blocks};
  for (int i = 1; i < t; ++i) {
    if (!span_equal(family.vectors(out.slices[0]),
                    family.vectors(out.slices[static_cast<std::size_t>(i)]))) {
      throw Error("internal: chain fixpoint produced span-unequal slices");
    }
  }
  return out;
}

Transversal merge_transversals(const Transversal& a, const Transversal& b) {
  if (a.t != b.t) {
    throw Error("cannot merge transversals of different width");
  }
  if (a.blocks != b.blocks) {
    throw Error("cannot merge transversals over different partitions");
  }
  Transversal out{a.t, {}, a.blocks};
  out.slices.reserve(a.slices.size());
  for (std::size_t i = 0; i < a.slices.size(); ++i) {
    out.slices.push_back(set_union(a.slices[i], b.slices[i]));
  }
  return out;
}

MaxRatioResult max_ratio_subset(const VectorFamily& family) {
  const int M = family.size();
  if (M == 0) {
    throw Error("max ratio subset of an empty family");
  }
  IndexSet zeros;
  for (int i = 1; i <= M; ++i) {
    if (family.vector(i).is_zero()) zeros.insert(i);
  }
  if (!zeros.empty()) {
    throw DegenerateFamilyError("family contains zero vectors", zeros);
  }

  // Only span-closed subsets matter: enumerate independent subsets as
  // candidate span generators, close each, dedupe by closure.
  MaxRatioResult best;
  bool found = false;
  std::set<IndexSet> seen;

  std::vector<int> basis_indices;
  std::vector<RationalVector> basis_vectors;

  auto consider = [&]() {
    IndexSet closure;
    for (int i = 1; i <= M; ++i) {
      if (in_span(family.vector(i), basis_vectors)) closure.insert(i);
    }
    if (!seen.insert(closure).second) return;
    const Rational ratio(static_cast<int>(closure.size()), static_cast<int>(basis_vectors.size()));
    const bool better = !found || ratio > best.ratio ||
                        (ratio == best.ratio && closure.size() > best.subset.size()) ||
                        (ratio == best.ratio && closure.size() == best.subset.size() &&
                         closure < best.subset);
    if (better) {
      best = {std::move(closure), ratio};
      found = true;
    }
  };

  const int dim_cap = std::min(M, family.dimension());
  auto dfs = [&](auto&& self, int start) -> void {
    if (!basis_indices.empty()) consider();
    if (static_cast<int>(basis_indices.size()) == dim_cap) return;
    for (int i = start; i <= M; ++i) {
      if (in_span(family.vector(i), basis_vectors)) continue;
      basis_indices.push_back(i);
      basis_vectors.push_back(family.vector(i));
      self(self, i + 1);
      basis_indices.pop_back();
      basis_vectors.pop_back();
    }
  };
  dfs(dfs, 1);
  return best;
}

FundamentalResult construct_fundamental(const VectorFamily& family) {
  IndexSet zeros;
  for (int i = 1; i <= family.size(); ++i) {
    if (family.vector(i).is_zero()) zeros.insert(i);
  }
  if (!zeros.empty()) {
    throw DegenerateFamilyError("family contains zero vectors", zeros);
  }

  Working working;
  working.reserve(static_cast<std::size_t>(family.size()));
  for (int i = 1; i <= family.size(); ++i) working.push_back({i, family.vector(i)});

  std::vector<Stage> stages;
  while (!working.empty()) {
    const VectorFamily wf = working_family(family, working);
    const MaxRatioResult mr = max_ratio_subset(wf);
    IndexSet transversal;
    for (int pos : mr.subset) transversal.insert(working[static_cast<std::size_t>(pos) - 1].index);

    Stage stage = make_stage(family, working, transversal, {});
    if (!stages.empty() && stages.back().k == stage.k) {
      // Merge rule: absorb this transversal into the previous stage and
      // replay it on that stage's snapshot. k is unchanged; t and s grow.
      Stage previous = std::move(stages.back());
      stages.pop_back();
      std::vector<IndexSet> merged = std::move(previous.merged);
      merged.push_back(transversal);
      const IndexSet forced = set_union(previous.transversal, transversal);
      working = rebuild_working(previous);
      stage = make_stage(family, working, forced, std::move(merged));
      if (stage.k != previous.k) {
        throw Error("internal: merge changed the stage block count");
      }
    }
    working = project_residual(working, stage.transversal);
    stages.push_back(std::move(stage));
  }

  for (std::size_t j = 1; j < stages.size(); ++j) {
    if (stages[j].k >= stages[j - 1].k) {
      throw Error("internal: stage block counts are not strictly decreasing");
    }
  }

  FundamentalResult result;
  if (!stages.empty()) {
    const int l = stages[0].k;
    std::vector<IndexSet> blocks(static_cast<std::size_t>(l));
    std::vector<std::vector<std::pair<int, int>>> cells(static_cast<std::size_t>(l));
    for (std::size_t j = 0; j < stages.size(); ++j) {
      const Stage& st = stages[j];
      for (int i = 0; i < st.k; ++i) {
        const IndexSet& slice = st.slices[static_cast<std::size_t>(i)];
        blocks[static_cast<std::size_t>(i)].insert(slice.begin(), slice.end());
        cells[static_cast<std::size_t>(i)].emplace_back(static_cast<int>(j) + 1,
                                                        static_cast<int>(slice.size()));
      }
    }
    std::vector<std::size_t> order(blocks.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (blocks[a].size() != blocks[b].size()) return blocks[a].size() > blocks[b].size();
      return *blocks[a].begin() < *blocks[b].begin();
    });
    for (std::size_t i : order) {
      result.partition.blocks.push_back(std::move(blocks[i]));
      result.block_cells.push_back(std::move(cells[i]));
    }
  }
  result.trace.stages = std::move(stages);

  const ValidationReport check = validate_ordered(family, result.partition);
  if (!check.valid()) {
    throw Error("internal: constructed partition failed validation");
  }
  return result;
}

VectorFamily snapshot_family(const Stage& stage) { return stage.projected_family; }

FundamentalCheck is_fundamental_detail(const VectorFamily& family,
                                       const OrderedPartition& partition, int exhaustive_limit) {
  const bool small = family.size() <= exhaustive_limit;
  if (!validate_ordered(family, partition).valid()) {
    return {false, small};
  }
  if (small) {
    OracleBudget budget;
    budget.max_family_size = exhaustive_limit;
    const std::vector<OrderedPartition> all = enumerate_independent_partitions(family, budget);
    const PartitionProfile profile = partition.profile();
    for (const OrderedPartition& q : all) {
      if (!majorizes(profile, q.profile())) return {false, true};
    }
    return {true, true};
  }
  // Certificate: every vector of every later block is reachable by a
  // t-transversal of the leading blocks, for every smaller t.
  const int l = partition.block_count();
  for (int b = 2; b <= l; ++b) {
    for (int t = 1; t < b; ++t) {
      for (int anchor : partition.blocks[static_cast<std::size_t>(b) - 1]) {
        try {
          find_transversal(family, partition, t, anchor);
        } catch (const Error&) {
          return {false, false};
        }
      }
    }
  }
  return {true, false};
}

bool is_fundamental(const VectorFamily& family, const OrderedPartition& partition) {
  return is_fundamental_detail(family, partition).fundamental;
}

}  // namespace radohorn
