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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace perfograph::embedding {

inline constexpr std::size_t kMaxDigits = 64;

/// Closed symbol alphabet: every numeric literal tokenizes into these, so
/// there is no out-of-vocabulary number.
inline constexpr std::string_view kDigitAlphabet = "0123456789.-+exabcdf";

struct DigitToken {
  char symbol;
  std::uint32_t position;

  friend auto operator<=>(const DigitToken &, const DigitToken &) = default;
};

using DigitTokenSeq = std::vector<DigitToken>;

bool is_digit_symbol(char c);

/// Splits a numeric literal into one (symbol, position) token per
/// character, in source order.
///
/// Accepted spellings: optional sign, then either a decimal integer, a
/// decimal float with optional exponent ("3.000000e+00"), or a hex literal
/// ("0x400921FB54442D18"). Letters are lower-cased.
///
/// Positions: the integer part (the digit run before '.', 'e' or the end;
/// for hex, the digits after "0x") gets place values with its rightmost
/// digit at 0. Characters to the left of it (sign, "0x") continue upward
/// from there, nearest first. Characters to the right ('.', fraction,
/// exponent) continue upward after those. Positions are therefore a
/// permutation of 0..n-1.
///
/// Throws NonNumeric for anything else and LiteralTooLong above kMaxDigits
/// characters.
DigitTokenSeq tokenize_numeric(std::string_view literal);

/// True when tokenize_numeric would succeed.
bool is_numeric_literal(std::string_view literal);

} // namespace perfograph::embedding
