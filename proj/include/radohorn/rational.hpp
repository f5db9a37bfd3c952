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

#ifndef RADOHORN_RATIONAL_HPP_
#define RADOHORN_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace radohorn {

// All arithmetic in this library is exact. Every quantity is a rational
// number with arbitrary-precision integer numerator and denominator; there
// are no tolerances anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q" (q > 0 after normalization). Surrounding
// whitespace is accepted; anything else raises ParseError.
Rational parse_rational(const std::string& text);

// Renders canonically: integers as "n", everything else as "p/q" with q > 1
// and the sign on the numerator. Inverse of parse_rational.
std::string to_fraction_string(const Rational& value);

}  // namespace radohorn

#endif  // RADOHORN_RATIONAL_HPP_
