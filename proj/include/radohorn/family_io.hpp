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

#ifndef RADOHORN_FAMILY_IO_HPP_
#define RADOHORN_FAMILY_IO_HPP_

#include <string>

#include "json.hpp"
#include "radohorn/family.hpp"

namespace radohorn {

// Canonical input: {"dimension": d, "vectors": [{"id": ..., "coords": [...]}]}.
// Coordinates are strings "p", "p/q" or JSON integers; floating point is
// rejected outright. Ids must be unique and nonempty. Raises ParseError.
VectorFamily parse_family_json(const std::string& text);

// Convenience reader: header row = ids, each following row one coordinate
// across all vectors (so columns are vectors). Converted to the JSON model
// before validation.
VectorFamily parse_family_csv(const std::string& text);

// Dispatches on extension (.json / .csv). Raises Error when unreadable and
// ParseError for malformed content.
VectorFamily read_family_file(const std::string& path);

// Exact serialization; parse(serialize(f)) reproduces f.
nlohmann::ordered_json family_to_json(const VectorFamily& family);

}  // namespace radohorn

#endif  // RADOHORN_FAMILY_IO_HPP_
