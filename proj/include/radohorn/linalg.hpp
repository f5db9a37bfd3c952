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

#ifndef RADOHORN_LINALG_HPP_
#define RADOHORN_LINALG_HPP_

#include <vector>

#include "radohorn/vector.hpp"

namespace radohorn {

// Rank of the span. Exact: denominators are cleared per row and the integer
// matrix is reduced with fraction-free (Bareiss) elimination. rank({}) == 0.
int rank(const std::vector<RationalVector>& vectors);

// rank == size. The empty list is independent.
bool is_independent(const std::vector<RationalVector>& vectors);

// Membership of v in span(spanning). The zero vector lies in every span,
// including the span of the empty list.
bool in_span(const RationalVector& v, const std::vector<RationalVector>& spanning);

// Coefficients c with v = sum c_i * independent[i]. Raises DependentSetError
// when the given list is dependent and OutOfSpanError when v is outside its
// span, in that order of checks.
std::vector<Rational> expansion_coefficients(const RationalVector& v,
                                             const std::vector<RationalVector>& independent);

// Component of v orthogonal to span(spanning) under the standard dot
// product. Returns the zero vector exactly when v lies in the span.
RationalVector project_complement(const RationalVector& v,
                                  const std::vector<RationalVector>& spanning);

// span(a) == span(b), decided via three rank computations.
bool span_equal(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b);

}  // namespace radohorn

#endif  // RADOHORN_LINALG_HPP_
