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

#include "perfograph/embedding/table.hpp"

#include "perfograph/errors.hpp"

#include <algorithm>

namespace perfograph::embedding {

namespace {

Vector make_row(std::uint64_t seed, const std::string &key, std::size_t k) {
  Vector v(k);
  for (std::size_t d = 0; d < k; ++d)
    v[d] = table_value(seed, key, d);
  return v;
}

std::string key(std::string_view tag, std::string_view name) {
  std::string s(tag);
  s += '\x1f';
  s += name;
  return s;
}

} // namespace

std::string_view to_string(Aggregation agg) {
  switch (agg) {
  case Aggregation::Mean:
    return "mean";
  case Aggregation::Max:
    return "max";
  case Aggregation::Sum:
    return "sum";
  }
  return "mean";
}

Aggregation parse_aggregation(std::string_view s) {
  if (s == "mean")
    return Aggregation::Mean;
  if (s == "max")
    return Aggregation::Max;
  if (s == "sum")
    return Aggregation::Sum;
  throw ConfigError("unknown aggregation '" + std::string(s) + "'");
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

float table_value(std::uint64_t seed, std::string_view key, std::size_t d) {
  const std::uint64_t z = splitmix64((seed ^ fnv1a64(key)) +
                                     (d + 1) * 0x9E3779B97F4A7C15ULL);
  return static_cast<float>(z >> 40) * 0x1p-23f - 1.0f;
}

EmbeddingTable::EmbeddingTable(std::uint64_t seed, std::size_t k,
                               const std::vector<std::string> &tokens)
    : seed_(seed), k_(k) {
  if (k == 0)
    throw ConfigError("embedding dimension must be positive");
  for (char c : kDigitAlphabet)
    symbols_.push_back(make_row(seed, key("symbol", std::string(1, c)), k));
  for (std::size_t p = 0; p < kMaxDigits; ++p)
    positions_.push_back(make_row(seed, key("position", std::to_string(p)), k));
  tokens_.emplace(kPadToken, make_row(seed, key("token", kPadToken), k));
  tokens_.emplace(kUnkToken, make_row(seed, key("token", kUnkToken), k));
  for (const auto &t : tokens)
    if (!tokens_.count(t))
      tokens_.emplace(t, make_row(seed, key("token", t), k));
}

std::span<const float> EmbeddingTable::symbol(char c) const {
  const auto i = kDigitAlphabet.find(c);
  if (i == std::string_view::npos)
    throw NonNumeric(std::string(1, c));
  return symbols_[i];
}

std::span<const float> EmbeddingTable::position(std::uint32_t p) const {
  if (p >= positions_.size())
    throw LiteralTooLong("position " + std::to_string(p));
  return positions_[p];
}

std::span<const float> EmbeddingTable::token(std::string_view t) const {
  auto it = tokens_.find(std::string(t));
  if (it == tokens_.end())
    it = tokens_.find(std::string(kUnkToken));
  return it->second;
}

bool EmbeddingTable::has_token(std::string_view t) const {
  return tokens_.count(std::string(t)) != 0;
}

Matrix embed_digits(const DigitTokenSeq &seq, const EmbeddingTable &table) {
  Matrix m{seq.size(), table.dim(), {}};
  m.data.reserve(m.rows * m.cols);
  for (const DigitToken &t : seq) {
    const auto s = table.symbol(t.symbol);
    const auto p = table.position(t.position);
    for (std::size_t d = 0; d < m.cols; ++d)
      m.data.push_back(s[d] + p[d]);
  }
  return m;
}

Vector aggregate(const Matrix &m, Aggregation agg) {
  if (m.rows == 0)
    throw EmptySequence();
  Vector out(m.cols);
  if (agg == Aggregation::Max) {
    const auto first = m.row(0);
    std::copy(first.begin(), first.end(), out.begin());
    for (std::size_t i = 1; i < m.rows; ++i) {
      const auto r = m.row(i);
      for (std::size_t d = 0; d < m.cols; ++d)
        out[d] = std::max(out[d], r[d]);
    }
    return out;
  }
  std::vector<double> acc(m.cols, 0.0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    const auto r = m.row(i);
    for (std::size_t d = 0; d < m.cols; ++d)
      acc[d] += static_cast<double>(r[d]);
  }
  for (std::size_t d = 0; d < m.cols; ++d) {
    const double v = agg == Aggregation::Mean
                         ? acc[d] / static_cast<double>(m.rows)
                         : acc[d];
    out[d] = static_cast<float>(v);
  }
  return out;
}

Vector embed_number(std::string_view literal, const EmbeddingTable &table,
                    Aggregation agg) {
  return aggregate(embed_digits(tokenize_numeric(literal), table), agg);
}

} // namespace perfograph::embedding
