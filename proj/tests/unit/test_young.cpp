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

#include "radohorn/young.hpp"

#include <string>

#include "doctest.h"
#include "radohorn/errors.hpp"

using namespace radohorn;

TEST_CASE("render_young [2,1] unicode") {
  const std::string expected =
      "┌──┬──┐\n"
      "│  │  │\n"
      "├──┼──┘\n"
      "│  │\n"
      "└──┘\n";
  CHECK(render_young(PartitionProfile{{2, 1}}) == expected);
}

TEST_CASE("render_young [2,1] ascii") {
  const std::string expected =
      "+--+--+\n"
      "|  |  |\n"
      "+--+--+\n"
      "|  |\n"
      "+--+\n";
  CHECK(render_young(PartitionProfile{{2, 1}}, {}, YoungStyle::kAscii) == expected);
}

TEST_CASE("render_young widens cells for labels and centers them") {
  CellLabels labels{{{1, 3}, "t2"}};
  const std::string expected =
      "+--+--+--+\n"
      "|  |  |t2|\n"
      "+--+--+--+\n"
      "|  |\n"
      "+--+\n";
  CHECK(render_young(PartitionProfile{{3, 1}}, labels, YoungStyle::kAscii) == expected);

  CellLabels wide{{{1, 1}, "abcd"}};
  const std::string widened =
      "+----+\n"
      "|abcd|\n"
      "+----+\n";
  CHECK(render_young(PartitionProfile{{1}}, wide, YoungStyle::kAscii) == widened);

  CellLabels odd{{{1, 1}, "x"}};
  // One-char label in a two-char cell sits flush left of center.
  CHECK(render_young(PartitionProfile{{1}}, odd, YoungStyle::kAscii) ==
        "+--+\n|x |\n+--+\n");
}

TEST_CASE("render_young rejects labels outside the shape") {
  CHECK_THROWS_AS(render_young(PartitionProfile{{2, 1}}, {{{2, 2}, "no"}}), Error);
  CHECK_THROWS_AS(render_young(PartitionProfile{{2}}, {{{0, 1}, "no"}}), Error);
}

TEST_CASE("render_young trivia") {
  CHECK(render_young(PartitionProfile{}) == "");
  CHECK(render_young(PartitionProfile{{1}}, {}, YoungStyle::kAscii) == "+--+\n|  |\n+--+\n");
  // Equal-width rows close cleanly.
  CHECK(render_young(PartitionProfile{{2, 2}}, {}, YoungStyle::kAscii) ==
        "+--+--+\n|  |  |\n+--+--+\n|  |  |\n+--+--+\n");
}
