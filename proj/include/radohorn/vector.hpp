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

#ifndef RADOHORN_VECTOR_HPP_
#define RADOHORN_VECTOR_HPP_

#include <initializer_list>
#include <string>
#include <vector>

#include "radohorn/rational.hpp"

namespace radohorn {

// Dense vector over the rationals. Comparison is exact componentwise
// equality; there is no notion of approximate equality in this library.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  int dimension() const { return static_cast<int>(coords_.size()); }

  const Rational& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }

  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;

  bool operator==(const RationalVector& other) const { return coords_ == other.coords_; }
  bool operator!=(const RationalVector& other) const { return !(*this == other); }

  // "(1, 0, -1/2)"; used in error messages and traces.
  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

// Componentwise sum/difference; scaling. Dimension mismatch raises
// DimensionError.
RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector subtract(const RationalVector& a, const RationalVector& b);
RationalVector scale(const Rational& c, const RationalVector& v);

// Standard dot product over the rationals.
Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace radohorn

#endif  // RADOHORN_VECTOR_HPP_
