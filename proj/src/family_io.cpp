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

#include "radohorn/family_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "radohorn/errors.hpp"
#include "radohorn/rational.hpp"

namespace radohorn {

namespace {

Rational parse_coordinate(const nlohmann::json& value) {
  if (value.is_string()) {
    return parse_rational(value.get<std::string>());
  }
  if (value.is_number_integer()) {
    return Rational(Integer(value.dump()));
  }
  if (value.is_number()) {
    throw ParseError("floating-point coordinates are not accepted; use \"p/q\" strings");
  }
  throw ParseError("coordinate must be an integer or a \"p/q\" string, got " + value.dump());
}

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

void require_unique_ids(const std::vector<FamilyEntry>& entries) {
  std::set<std::string> seen;
  for (const FamilyEntry& e : entries) {
    if (e.label.empty()) throw ParseError("vector ids must be nonempty");
    if (!seen.insert(e.label).second) throw ParseError("duplicate vector id: '" + e.label + "'");
  }
}

}  // namespace

VectorFamily parse_family_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("family document must be a JSON object");
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer()) {
    throw ParseError("family document needs an integer \"dimension\"");
  }
  const int dimension = doc["dimension"].get<int>();
  if (dimension < 1) throw ParseError("dimension must be positive");
  if (!doc.contains("vectors") || !doc["vectors"].is_array()) {
    throw ParseError("family document needs a \"vectors\" array");
  }

  std::vector<FamilyEntry> entries;
  for (const nlohmann::json& item : doc["vectors"]) {
    if (!item.is_object() || !item.contains("id") || !item["id"].is_string() ||
        !item.contains("coords") || !item["coords"].is_array()) {
      throw ParseError("each vector needs an \"id\" string and a \"coords\" array");
    }
    const std::string id = item["id"].get<std::string>();
    if (static_cast<int>(item["coords"].size()) != dimension) {
      throw ParseError("vector '" + id + "' has " + std::to_string(item["coords"].size()) +
                       " coordinates, expected " + std::to_string(dimension));
    }
    std::vector<Rational> coords;
    coords.reserve(static_cast<std::size_t>(dimension));
    for (const nlohmann::json& c : item["coords"]) coords.push_back(parse_coordinate(c));
    entries.push_back({id, RationalVector(std::move(coords))});
  }
  require_unique_ids(entries);
  return VectorFamily(dimension, std::move(entries));
}

VectorFamily parse_family_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    rows.push_back(split_csv_row(line));
  }
  if (rows.size() < 2) {
    throw ParseError("CSV needs a header row of ids and at least one coordinate row");
  }

  const std::vector<std::string>& ids = rows[0];
  const std::size_t vectors = ids.size();
  const int dimension = static_cast<int>(rows.size()) - 1;
  std::vector<std::vector<Rational>> columns(vectors);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != vectors) {
      throw ParseError("CSV row " + std::to_string(r + 1) + " has " +
                       std::to_string(rows[r].size()) + " fields, expected " +
                       std::to_string(vectors));
    }
    for (std::size_t c = 0; c < vectors; ++c) columns[c].push_back(parse_rational(rows[r][c]));
  }

  std::vector<FamilyEntry> entries;
  entries.reserve(vectors);
  for (std::size_t c = 0; c < vectors; ++c) {
    entries.push_back({ids[c], RationalVector(std::move(columns[c]))});
  }
  require_unique_ids(entries);
  return VectorFamily(dimension, std::move(entries));
}

VectorFamily read_family_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read input file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".json") return parse_family_json(text);
  if (ext == ".csv") return parse_family_csv(text);
  throw ParseError("unsupported input extension '" + ext + "'; expected .json or .csv");
}

nlohmann::ordered_json family_to_json(const VectorFamily& family) {
  nlohmann::ordered_json doc;
  doc["dimension"] = family.dimension();
  doc["vectors"] = nlohmann::ordered_json::array();
  for (int i = 1; i <= family.size(); ++i) {
    nlohmann::ordered_json item;
    item["id"] = family.label(i);
    nlohmann::ordered_json coords = nlohmann::ordered_json::array();
    for (const Rational& c : family.vector(i).coords()) coords.push_back(to_fraction_string(c));
    item["coords"] = std::move(coords);
    doc["vectors"].push_back(std::move(item));
  }
  return doc;
}

}  // namespace radohorn
