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

#include "doctest.h"
#include "radohorn/errors.hpp"
#include "radohorn/linalg.hpp"
#include "test_support.hpp"

using namespace radohorn;
using radohorn::testing::fam_a;
using radohorn::testing::fam_b;

TEST_CASE("canonical_partition sorts by size then smallest member") {
  OrderedPartition p = canonical_partition({{3}, {1, 2}, {4, 5}});
  CHECK(p.blocks == std::vector<IndexSet>{{1, 2}, {4, 5}, {3}});
  CHECK(p.profile().sizes == std::vector<int>{2, 2, 1});
  CHECK(p.block_of(4) == 2);
  CHECK(p.block_of(9) == 0);
  CHECK_THROWS_AS(canonical_partition({{1}, {}}), Error);
  CHECK_THROWS_AS(canonical_partition({{1, 2}, {2, 3}}), Error);
}

TEST_CASE("validate_ordered flags each defect separately") {
  VectorFamily f = fam_a();

  ValidationReport good = validate_ordered(f, canonical_partition({{1, 2}, {3}}));
  CHECK(good.valid());
  CHECK(good.issues.empty());

  OrderedPartition unordered;
  unordered.blocks = {{3}, {1, 2}};
  CHECK_FALSE(validate_ordered(f, unordered).sizes_ordered);

  OrderedPartition partial;
  partial.blocks = {{1, 2}};
  CHECK_FALSE(validate_ordered(f, partial).covers);

  OrderedPartition dependent;
  dependent.blocks = {{1, 2, 3}};
  ValidationReport r = validate_ordered(f, dependent);
  CHECK_FALSE(r.valid());
  CHECK(r.dependent_blocks == std::vector<int>{1});

  OrderedPartition stray;
  stray.blocks = {{1, 2}, {3, 7}};
  CHECK_FALSE(validate_ordered(f, stray).indices_in_range);
}

TEST_CASE("majorizes uses prefix sums with zero padding") {
  PartitionProfile a{{2, 1}};
  PartitionProfile b{{1, 1, 1}};
  CHECK(majorizes(a, b));
  CHECK_FALSE(majorizes(b, a));
  CHECK(majorizes(a, a));
  // Incomparable pair on equal totals: 3 < 4 one way, 4+1 < 3+3 the other.
  PartitionProfile c{{3, 3}};
  PartitionProfile d{{4, 1, 1}};
  CHECK_FALSE(majorizes(c, d));
  CHECK_FALSE(majorizes(d, c));
  CHECK(majorizes(PartitionProfile{{4, 2}}, c));
  CHECK_THROWS_AS(majorizes(a, PartitionProfile{{5}}), Error);
}

TEST_CASE("exchange swaps along a nonzero coefficient") {
  VectorFamily f = fam_a();
  // phi3 = phi1 + phi2: both pivots are legal.
  IndexSet block = {1, 2};
  IndexSet swapped = exchange(f, block, 3, 1);
  CHECK(swapped == IndexSet{2, 3});
  CHECK(span_equal(f.vectors(swapped), f.vectors(block)));
  CHECK(is_independent(f.vectors(swapped)));
}

TEST_CASE("exchange rejects zero pivots and bad arguments") {
  VectorFamily f = radohorn::testing::make_family(2, {{1, 0}, {0, 1}, {1, 0}});
  // phi3 = 1*phi1 + 0*phi2: pivot 2 has a zero coefficient.
  CHECK_THROWS_AS(exchange(f, {1, 2}, 3, 2), ZeroPivotError);
  CHECK(exchange(f, {1, 2}, 3, 1) == IndexSet{2, 3});
  // Incoming already inside, pivot outside, dependent block, out-of-span incoming.
  CHECK_THROWS_AS(exchange(f, {1, 2}, 2, 1), Error);
  CHECK_THROWS_AS(exchange(f, {1, 2}, 3, 3), Error);
  VectorFamily g = fam_b();
  CHECK_THROWS_AS(exchange(g, {1, 2}, 3, 1), DependentSetError);
  VectorFamily h = radohorn::testing::make_family(2, {{1, 0}, {0, 1}});
  CHECK_THROWS_AS(exchange(h, {1}, 2, 1), OutOfSpanError);
}
