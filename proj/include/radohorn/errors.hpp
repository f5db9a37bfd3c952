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

#ifndef RADOHORN_ERRORS_HPP_
#define RADOHORN_ERRORS_HPP_

#include <set>
#include <stdexcept>
#include <string>

namespace radohorn {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vectors of mismatched dimension were mixed in one operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A vector was required to lie in a span and does not.
class OutOfSpanError : public Error {
 public:
  using Error::Error;
};

// A set that must be linearly independent is not.
class DependentSetError : public Error {
 public:
  using Error::Error;
};

// An operation met a zero vector where a nonzero one is required.
class ZeroPivotError : public Error {
 public:
  using Error::Error;
};

// The family contains zero vectors; carries their 1-based indices.
class DegenerateFamilyError : public Error {
 public:
  DegenerateFamilyError(std::string message, std::set<int> zero_indices)
      : Error(std::move(message)), zero_indices_(std::move(zero_indices)) {}

  const std::set<int>& zero_indices() const { return zero_indices_; }

 private:
  std::set<int> zero_indices_;
};

// An exhaustive oracle was asked to exceed its configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (rational literals, JSON documents, CSV rows).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace radohorn

#endif  // RADOHORN_ERRORS_HPP_
