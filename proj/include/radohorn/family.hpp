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

#ifndef RADOHORN_FAMILY_HPP_
#define RADOHORN_FAMILY_HPP_

#include <set>
#include <string>
#include <vector>

#include "radohorn/vector.hpp"

namespace radohorn {

// Indices into a family are 1-based everywhere in the public API.
using IndexSet = std::set<int>;

struct FamilyEntry {
  std::string label;
  RationalVector vector;
};

// Finite labeled list of vectors in Q^d. Repetitions are allowed and
// significant: the family is a multiset, distinguished by index.
class VectorFamily {
 public:
  // dimension must be positive; every entry must have that dimension.
  VectorFamily(int dimension, std::vector<FamilyEntry> entries);

  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(entries_.size()); }

  const RationalVector& vector(int index) const;  // 1-based
  const std::string& label(int index) const;      // 1-based

  // Vectors picked by index, in increasing index order.
  std::vector<RationalVector> vectors(const IndexSet& indices) const;

  // {1, ..., size()}.
  IndexSet all_indices() const;

 private:
  void require_index(int index) const;

  int dimension_;
  std::vector<FamilyEntry> entries_;
};

std::vector<int> to_sorted_vector(const IndexSet& s);
IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_difference(const IndexSet& a, const IndexSet& b);

}  // namespace radohorn

#endif  // RADOHORN_FAMILY_HPP_
