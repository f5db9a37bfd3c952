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

#include "radohorn/family.hpp"

#include <algorithm>
#include <set>

#include "radohorn/errors.hpp"

namespace radohorn {

VectorFamily::VectorFamily(int dimension, std::vector<FamilyEntry> entries)
    : dimension_(dimension), entries_(std::move(entries)) {
  if (dimension_ < 1) {
    throw DimensionError("family dimension must be positive, got " + std::to_string(dimension_));
  }
  // Reports reference vectors by label, so labels must be usable as keys.
  std::set<std::string> seen;
  for (const FamilyEntry& e : entries_) {
    if (e.vector.dimension() != dimension_) {
      throw DimensionError("entry '" + e.label + "' has dimension " +
                           std::to_string(e.vector.dimension()) + ", family dimension is " +
                           std::to_string(dimension_));
    }
    if (e.label.empty()) throw Error("vector id must be nonempty");
    if (!seen.insert(e.label).second) throw Error("duplicate vector id: '" + e.label + "'");
  }
}

void VectorFamily::require_index(int index) const {
  if (index < 1 || index > size()) {
    throw Error("family index out of range: " + std::to_string(index));
  }
}

const RationalVector& VectorFamily::vector(int index) const {
  require_index(index);
  return entries_[static_cast<std::size_t>(index - 1)].vector;
}

const std::string& VectorFamily::label(int index) const {
  require_index(index);
  return entries_[static_cast<std::size_t>(index - 1)].label;
}

std::vector<RationalVector> VectorFamily::vectors(const IndexSet& indices) const {
  std::vector<RationalVector> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(vector(i));
  return out;
}

IndexSet VectorFamily::all_indices() const {
  IndexSet out;
  for (int i = 1; i <= size(); ++i) out.insert(i);
  return out;
}

std::vector<int> to_sorted_vector(const IndexSet& s) {
  return std::vector<int>(s.begin(), s.end());
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

}  // namespace radohorn
