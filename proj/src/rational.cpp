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

#include "radohorn/rational.hpp"

#include <cctype>
#include <cstddef>

#include "radohorn/errors.hpp"

namespace radohorn {

namespace {

// Reads an optionally signed decimal integer starting at pos; advances pos.
Integer read_integer(const std::string& text, std::size_t& pos) {
  const std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  const std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits) {
    throw ParseError("invalid rational literal: '" + text + "'");
  }
  return Integer(text.substr(start, pos - start));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::string body = text.substr(begin, end - begin);

  std::size_t pos = 0;
  const Integer numerator = read_integer(body, pos);
  if (pos == body.size()) {
    return Rational(numerator);
  }
  if (body[pos] != '/') {
    throw ParseError("invalid rational literal: '" + text + "'");
  }
  ++pos;
  const Integer denominator = read_integer(body, pos);
  if (pos != body.size()) {
    throw ParseError("invalid rational literal: '" + text + "'");
  }
  if (denominator == 0) {
    throw ParseError("zero denominator in rational literal: '" + text + "'");
  }
  return Rational(numerator, denominator);
}

std::string to_fraction_string(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

}  // namespace radohorn
