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

#include "radohorn/linalg.hpp"

#include <cstddef>
#include <utility>

#include "radohorn/errors.hpp"

namespace radohorn {

namespace {

void require_uniform_dimension(const std::vector<RationalVector>& vectors) {
  for (std::size_t i = 1; i < vectors.size(); ++i) {
    if (vectors[i].dimension() != vectors[0].dimension()) {
      throw DimensionError("vector dimensions differ within one operation");
    }
  }
}

// Clears denominators: row i becomes vectors[i] scaled by the lcm of its
// coordinate denominators. Scaling a row by a nonzero rational preserves rank.
std::vector<std::vector<Integer>> integer_rows(const std::vector<RationalVector>& vectors) {
  std::vector<std::vector<Integer>> rows;
  rows.reserve(vectors.size());
  for (const RationalVector& v : vectors) {
    Integer lcm_den = 1;
    for (const Rational& c : v.coords()) {
      const Integer den = denominator(c);
      lcm_den = boost::multiprecision::lcm(lcm_den, den);
    }
    std::vector<Integer> row;
    row.reserve(v.coords().size());
    for (const Rational& c : v.coords()) {
      row.push_back(numerator(c) * (lcm_den / denominator(c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Fraction-free Gaussian elimination (Bareiss). All divisions are exact.
int bareiss_rank(std::vector<std::vector<Integer>> m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  Integer prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(pivot)]);
    auto& pr = m[static_cast<std::size_t>(r)];
    for (int i = r + 1; i < rows; ++i) {
      auto& ri = m[static_cast<std::size_t>(i)];
      for (int j = c + 1; j < cols; ++j) {
        ri[static_cast<std::size_t>(j)] =
            (pr[static_cast<std::size_t>(c)] * ri[static_cast<std::size_t>(j)] -
             ri[static_cast<std::size_t>(c)] * pr[static_cast<std::size_t>(j)]) /
            prev;
      }
      ri[static_cast<std::size_t>(c)] = 0;
    }
    prev = pr[static_cast<std::size_t>(c)];
    ++r;
  }
  return r;
}

}  // namespace

int rank(const std::vector<RationalVector>& vectors) {
  if (vectors.empty()) return 0;
  require_uniform_dimension(vectors);
  return bareiss_rank(integer_rows(vectors));
}

bool is_independent(const std::vector<RationalVector>& vectors) {
  return rank(vectors) == static_cast<int>(vectors.size());
}

bool in_span(const RationalVector& v, const std::vector<RationalVector>& spanning) {
  if (v.is_zero()) return true;
  if (spanning.empty()) return false;
  if (v.dimension() != spanning[0].dimension()) {
    throw DimensionError("vector dimensions differ within one operation");
  }
  const int base = rank(spanning);
  std::vector<RationalVector> extended(spanning);
  extended.push_back(v);
  return rank(extended) == base;
}

std::vector<Rational> expansion_coefficients(const RationalVector& v,
                                             const std::vector<RationalVector>& independent) {
  require_uniform_dimension(independent);
  if (!independent.empty() && v.dimension() != independent[0].dimension()) {
    throw DimensionError("vector dimensions differ within one operation");
  }
  if (!is_independent(independent)) {
    throw DependentSetError("expansion requires a linearly independent list");
  }
  const int m = static_cast<int>(independent.size());
  if (m == 0) {
    if (!v.is_zero()) throw OutOfSpanError("vector outside span: " + v.to_string());
    return {};
  }

  // Columns are the basis vectors, augmented with v; plain rational
  // Gauss-Jordan. Independence was checked above, so every column gets a
  // pivot; a leftover nonzero entry in the augmented column means v is
  // outside the span.
  const int dim = v.dimension();
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(dim),
                                       std::vector<Rational>(static_cast<std::size_t>(m) + 1));
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < m; ++c) {
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          independent[static_cast<std::size_t>(c)][r];
    }
    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(m)] = v[r];
  }

  std::vector<int> pivot_row_of_col(static_cast<std::size_t>(m), -1);
  int row = 0;
  for (int c = 0; c < m && row < dim; ++c) {
    int pivot = -1;
    for (int r = row; r < dim; ++r) {
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(row)], a[static_cast<std::size_t>(pivot)]);
    const Rational inv = Rational(1) / a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
    for (int j = c; j <= m; ++j) {
      a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] *= inv;
    }
    for (int r = 0; r < dim; ++r) {
      if (r == row) continue;
      const Rational f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int j = c; j <= m; ++j) {
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
            f * a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
      }
    }
    pivot_row_of_col[static_cast<std::size_t>(c)] = row;
    ++row;
  }

  for (int r = row; r < dim; ++r) {
    if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(m)] != 0) {
      throw OutOfSpanError("vector outside span: " + v.to_string());
    }
  }

  std::vector<Rational> coefficients(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) {
    coefficients[static_cast<std::size_t>(c)] =
        a[static_cast<std::size_t>(pivot_row_of_col[static_cast<std::size_t>(c)])]
         [static_cast<std::size_t>(m)];
  }
  return coefficients;
}

RationalVector project_complement(const RationalVector& v,
                                  const std::vector<RationalVector>& spanning) {
  require_uniform_dimension(spanning);
  if (!spanning.empty() && v.dimension() != spanning[0].dimension()) {
    throw DimensionError("vector dimensions differ within one operation");
  }

  // Greedy basis of the span, then exact Gram-Schmidt.
  std::vector<RationalVector> basis;
  for (const RationalVector& s : spanning) {
    if (!in_span(s, basis)) basis.push_back(s);
  }
  std::vector<RationalVector> ortho;
  ortho.reserve(basis.size());
  for (const RationalVector& b : basis) {
    RationalVector u = b;
    for (const RationalVector& o : ortho) {
      u = subtract(u, scale(dot(u, o) / dot(o, o), o));
    }
    ortho.push_back(std::move(u));
  }

  RationalVector residual = v;
  for (const RationalVector& o : ortho) {
    residual = subtract(residual, scale(dot(residual, o) / dot(o, o), o));
  }
  return residual;
}

bool span_equal(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b) {
  if (!a.empty() && !b.empty() && a[0].dimension() != b[0].dimension()) {
    throw DimensionError("vector dimensions differ within one operation");
  }
  const int ra = rank(a);
  const int rb = rank(b);
  if (ra != rb) return false;
  std::vector<RationalVector> joint(a);
  joint.insert(joint.end(), b.begin(), b.end());
  return rank(joint) == ra;
}

}  // namespace radohorn
