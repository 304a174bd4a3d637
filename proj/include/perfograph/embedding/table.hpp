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

#include "perfograph/embedding/digits.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace perfograph::embedding {

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::size_t kDefaultDim = 40;
inline constexpr std::string_view kPadToken = "<pad>";
inline constexpr std::string_view kUnkToken = "<unk>";

using Vector = std::vector<float>;

/// Row-major n x k matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<float> data;

  std::span<const float> row(std::size_t i) const {
    return {data.data() + i * cols, cols};
  }
};

enum class Aggregation { Mean, Max, Sum };

std::string_view to_string(Aggregation agg);
/// Accepts "mean", "max", "sum"; throws ConfigError otherwise.
Aggregation parse_aggregation(std::string_view s);

/// Deterministic value in [-1, 1) for (seed, key, dimension).
///
/// key hash: FNV-1a 64 of the key bytes. value: splitmix64 of
/// (seed ^ hash) + (d + 1) * 0x9E3779B97F4A7C15, top 24 bits scaled by
/// 2^-23, minus 1. Exact in binary32.
float table_value(std::uint64_t seed, std::string_view key, std::size_t d);

std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t splitmix64(std::uint64_t x);

/// Fixed, seeded symbol / position / token tables.
///
/// Table keys: "symbol\x1f<c>", "position\x1f<p>", "token\x1f<t>". The
/// token table holds the given vocabulary plus <pad> and <unk>; any other
/// token reads the <unk> row.
class EmbeddingTable {
public:
  EmbeddingTable(std::uint64_t seed = kDefaultSeed, std::size_t k = kDefaultDim,
                 const std::vector<std::string> &tokens = {});

  std::uint64_t seed() const { return seed_; }
  std::size_t dim() const { return k_; }

  /// Throws NonNumeric for a symbol outside the digit alphabet.
  std::span<const float> symbol(char c) const;
  /// Throws LiteralTooLong for position >= kMaxDigits.
  std::span<const float> position(std::uint32_t p) const;
  std::span<const float> token(std::string_view t) const;
  bool has_token(std::string_view t) const;

private:
  std::uint64_t seed_;
  std::size_t k_;
  std::vector<Vector> symbols_;
  std::vector<Vector> positions_;
  std::unordered_map<std::string, Vector> tokens_;
};

/// Row i = symbol(sym_i) + position(pos_i).
Matrix embed_digits(const DigitTokenSeq &seq, const EmbeddingTable &table);

/// Column-wise reduction over rows. Sum and Mean accumulate in double in
/// row order and round to float once at the end. Throws EmptySequence
/// when m has no rows.
Vector aggregate(const Matrix &m, Aggregation agg);

/// tokenize_numeric, embed_digits, aggregate.
Vector embed_number(std::string_view literal, const EmbeddingTable &table,
                    Aggregation agg = Aggregation::Mean);

} // namespace perfograph::embedding
