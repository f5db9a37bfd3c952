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

#ifndef RADOHORN_ORACLE_HPP_
#define RADOHORN_ORACLE_HPP_

#include <vector>

#include "radohorn/fundamental.hpp"
#include "radohorn/partition.hpp"

namespace radohorn {

// Brute-force ground truth at desk scale. Budgets fail loudly (BudgetError);
// nothing is ever silently truncated.
struct OracleBudget {
  int max_family_size = 10;  // caps partition enumeration
  int max_subset_scan = 20;  // caps the 2^M subset scan
};

// Every set partition of 1..M whose blocks are all independent, each in
// canonical ordered form. Requires a clean family within budget.
std::vector<OrderedPartition> enumerate_independent_partitions(const VectorFamily& family,
                                                               const OracleBudget& budget = {});

// Iterated-supremum fundamental partition over the full enumeration:
// lexicographically greatest profile, then the lexicographically least
// block realization.
OrderedPartition oracle_fundamental(const VectorFamily& family, const OracleBudget& budget = {});

// Scans all 2^M - 1 nonempty subsets; same tie-break as max_ratio_subset.
MaxRatioResult oracle_max_ratio(const VectorFamily& family, const OracleBudget& budget = {});

// Least k admitting a partition into k independent sets.
int oracle_min_parts(const VectorFamily& family, const OracleBudget& budget = {});

}  // namespace radohorn

#endif  // RADOHORN_ORACLE_HPP_
