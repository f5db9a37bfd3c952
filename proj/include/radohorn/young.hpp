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

#ifndef RADOHORN_YOUNG_HPP_
#define RADOHORN_YOUNG_HPP_

#include <map>
#include <string>
#include <utility>

#include "radohorn/partition.hpp"

namespace radohorn {

enum class YoungStyle { kUnicode, kAscii };

// Optional per-cell text, keyed by (row, column), both 1-based.
using CellLabels = std::map<std::pair<int, int>, std::string>;

// English-notation Young diagram of the profile, one box per cell, with
// correct junction characters between rows of different widths. All cells
// share one width: max(2, longest label). Returns a newline-terminated
// block; empty profile renders as the empty string. Labels addressing cells
// outside the diagram raise Error.
std::string render_young(const PartitionProfile& profile, const CellLabels& labels = {},
                         YoungStyle style = YoungStyle::kUnicode);

}  // namespace radohorn

#endif  // RADOHORN_YOUNG_HPP_
