// Copyright 2026 The Perfograph Authors.
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

#include "perfograph/embedding/digits.hpp"

#include "perfograph/errors.hpp"

#include <cctype>
#include <string>

namespace perfograph::embedding {

namespace {

bool is_dec(char c) { return c >= '0' && c <= '9'; }
bool is_hex(char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; }

char lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

struct Split {
  std::size_t int_begin;
  std::size_t int_end;
};

// Validates the literal and locates its integer part. Returns false for
// anything that is not a numeric spelling.
bool split_literal(std::string_view s, Split &out) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+'))
    ++i;
  if (i + 1 < s.size() && s[i] == '0' && (s[i + 1] == 'x' || s[i + 1] == 'X')) {
    const std::size_t b = i + 2;
    if (b == s.size())
      return false;
    for (std::size_t k = b; k < s.size(); ++k)
      if (!is_hex(s[k]))
        return false;
    out = {b, s.size()};
    return true;
  }
  const std::size_t b = i;
  while (i < s.size() && is_dec(s[i]))
    ++i;
  const std::size_t e = i;
  std::size_t frac_digits = 0;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && is_dec(s[i])) {
      ++i;
      ++frac_digits;
    }
  }
  if (e == b && frac_digits == 0)
    return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-'))
      ++i;
    const std::size_t exp_begin = i;
    while (i < s.size() && is_dec(s[i]))
      ++i;
    if (i == exp_begin)
      return false;
  }
  if (i != s.size())
    return false;
  out = {b, e};
  return true;
}

} // namespace

bool is_digit_symbol(char c) {
  return kDigitAlphabet.find(c) != std::string_view::npos;
}

bool is_numeric_literal(std::string_view literal) {
  Split split{};
  return split_literal(literal, split) && literal.size() <= kMaxDigits;
}

DigitTokenSeq tokenize_numeric(std::string_view literal) {
  Split split{};
  if (!split_literal(literal, split))
    throw NonNumeric(std::string(literal));
  if (literal.size() > kMaxDigits)
    throw LiteralTooLong(std::string(literal));

  const std::size_t a = split.int_begin;
  const std::size_t b = split.int_end;
  const std::size_t int_len = b - a;
  DigitTokenSeq seq;
  seq.reserve(literal.size());
  for (std::size_t k = 0; k < literal.size(); ++k) {
    std::size_t pos;
    if (k >= a && k < b)
      pos = b - 1 - k;
    else if (k < a)
      pos = int_len + (a - 1 - k);
    else
      pos = k; // int_len + a + (k - b)
    seq.push_back({lower(literal[k]), static_cast<std::uint32_t>(pos)});
  }
  return seq;
}

} // namespace perfograph::embedding
