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

#include "perfograph/graph/program_graph.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace perfograph::io {

inline constexpr std::int64_t kPadId = 0;
inline constexpr std::int64_t kUnkId = 1;

/// Occurrences of each text_token and type_string.
using TokenCounts = std::map<std::string, std::uint64_t, std::less<>>;

TokenCounts count_tokens(const graph::ProgramGraph &graph);
void merge_counts(TokenCounts &into, const TokenCounts &from);

/// Dense token ids: 0 = <pad>, 1 = <unk>, then every token seen at least
/// min_count times, by descending count and then lexicographically.
class Vocab {
public:
  Vocab();

  /// Id of `token`; <unk> for unknown tokens, or VocabMiss when closed.
  std::int64_t id(std::string_view token) const;
  bool contains(std::string_view token) const;
  /// Tokens in id order, including <pad> and <unk>.
  const std::vector<std::string> &tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }

  std::uint64_t seed = 42;
  std::size_t k = 40;
  std::uint64_t min_count = 1;
  bool closed = false;

private:
  friend Vocab vocab_from_counts(const TokenCounts &, std::uint64_t);
  friend Vocab vocab_from_json(std::string_view);
  void push(std::string token);

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::int64_t> ids_;
};

Vocab vocab_from_counts(const TokenCounts &counts, std::uint64_t min_count);
Vocab build_vocab(std::span<const graph::ProgramGraph> corpus,
                  std::uint64_t min_count = 1);

/// {"format_version", "seed", "k", "min_count", "closed", "tokens": {token: id}}
std::string vocab_to_json(const Vocab &vocab);
/// Throws SchemaError.
Vocab vocab_from_json(std::string_view text);

/// FNV-1a 64 of the bytes, as 16 lower-case hex digits.
std::string checksum(std::string_view bytes);

} // namespace perfograph::io
