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

#include "radohorn/vector.hpp"

#include <algorithm>

#include "radohorn/errors.hpp"

namespace radohorn {

namespace {

void require_same_dimension(const RationalVector& a, const RationalVector& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionError("vector dimensions differ: " + std::to_string(a.dimension()) +
                         " vs " + std::to_string(b.dimension()));
  }
}

}  // namespace

bool RationalVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& c) { return c == 0; });
}

std::string RationalVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_fraction_string(coords_[i]);
  }
  out += ")";
  return out;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  require_same_dimension(a, b);
  std::vector<Rational> coords(a.coords());
  for (int i = 0; i < b.dimension(); ++i) coords[static_cast<std::size_t>(i)] += b[i];
  return RationalVector(std::move(coords));
}

RationalVector subtract(const RationalVector& a, const RationalVector& b) {
  require_same_dimension(a, b);
  std::vector<Rational> coords(a.coords());
  for (int i = 0; i < b.dimension(); ++i) coords[static_cast<std::size_t>(i)] -= b[i];
  return RationalVector(std::move(coords));
}

RationalVector scale(const Rational& c, const RationalVector& v) {
  std::vector<Rational> coords(v.coords());
  for (Rational& x : coords) x *= c;
  return RationalVector(std::move(coords));
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  require_same_dimension(a, b);
  Rational sum = 0;
  for (int i = 0; i < a.dimension(); ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace radohorn
