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

#include "perfograph/io/vocab.hpp"

#include "json_detail.hpp"
#include "perfograph/embedding/table.hpp"
#include "perfograph/errors.hpp"
#include "perfograph/io/json.hpp"

#include <algorithm>
#include <cstdio>

namespace perfograph::io {

TokenCounts count_tokens(const graph::ProgramGraph &graph) {
  TokenCounts counts;
  for (const auto &n : graph.nodes()) {
    ++counts[n.attrs.text_token];
    if (n.attrs.type_string)
      ++counts[*n.attrs.type_string];
  }
  return counts;
}

void merge_counts(TokenCounts &into, const TokenCounts &from) {
  for (const auto &[t, c] : from)
    into[t] += c;
}

Vocab::Vocab() {
  push(std::string(embedding::kPadToken));
  push(std::string(embedding::kUnkToken));
}

void Vocab::push(std::string token) {
  ids_.emplace(token, static_cast<std::int64_t>(tokens_.size()));
  tokens_.push_back(std::move(token));
}

std::int64_t Vocab::id(std::string_view token) const {
  const auto it = ids_.find(std::string(token));
  if (it != ids_.end())
    return it->second;
  if (closed)
    throw VocabMiss(std::string(token));
  return kUnkId;
}

bool Vocab::contains(std::string_view token) const {
  return ids_.count(std::string(token)) != 0;
}

Vocab vocab_from_counts(const TokenCounts &counts, std::uint64_t min_count) {
  std::vector<std::pair<std::string, std::uint64_t>> kept;
  for (const auto &[t, c] : counts)
    if (c >= min_count && t != embedding::kPadToken && t != embedding::kUnkToken)
      kept.emplace_back(t, c);
  std::sort(kept.begin(), kept.end(), [](const auto &a, const auto &b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  Vocab v;
  v.min_count = min_count;
  for (auto &[t, c] : kept)
    v.push(std::move(t));
  return v;
}

Vocab build_vocab(std::span<const graph::ProgramGraph> corpus,
                  std::uint64_t min_count) {
  TokenCounts counts;
  for (const auto &g : corpus)
    merge_counts(counts, count_tokens(g));
  return vocab_from_counts(counts, min_count);
}

std::string vocab_to_json(const Vocab &vocab) {
  detail::Json doc = detail::Json::object();
  doc["format_version"] = kFormatVersion;
  doc["seed"] = vocab.seed;
  doc["k"] = vocab.k;
  doc["min_count"] = vocab.min_count;
  doc["closed"] = vocab.closed;
  detail::Json tokens = detail::Json::object();
  for (std::size_t i = 0; i < vocab.tokens().size(); ++i)
    tokens[vocab.tokens()[i]] = i;
  doc["tokens"] = std::move(tokens);
  return detail::dump(doc);
}

Vocab vocab_from_json(std::string_view text) {
  const detail::Json doc = detail::parse_document(text);
  detail::check_version(doc, "vocab");
  Vocab v;
  v.seed = detail::get_uint(doc, "seed", "vocab");
  v.k = detail::get_uint(doc, "k", "vocab");
  v.min_count = detail::get_uint(doc, "min_count", "vocab");
  if (doc.contains("closed")) {
    if (!doc["closed"].is_boolean())
      throw SchemaError("vocab.closed", "expected a boolean");
    v.closed = doc["closed"].get<bool>();
  }
  const detail::Json &tokens = detail::field(doc, "tokens", "vocab");
  if (!tokens.is_object())
    throw SchemaError("vocab.tokens", "expected an object");
  std::vector<std::string> by_id(tokens.size());
  std::vector<bool> seen(tokens.size(), false);
  for (const auto &[t, id] : tokens.items()) {
    if (!id.is_number_unsigned() || id.get<std::uint64_t>() >= by_id.size() ||
        seen[id.get<std::size_t>()])
      throw SchemaError("vocab.tokens." + t, "ids must be dense and unique");
    seen[id.get<std::size_t>()] = true;
    by_id[id.get<std::size_t>()] = t;
  }
  if (by_id.size() < 2 || by_id[0] != embedding::kPadToken ||
      by_id[1] != embedding::kUnkToken)
    throw SchemaError("vocab.tokens", "ids 0 and 1 must be <pad> and <unk>");
  for (std::size_t i = 2; i < by_id.size(); ++i)
    v.push(std::move(by_id[i]));
  return v;
}

std::string checksum(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(embedding::fnv1a64(bytes)));
  return buf;
}

} // namespace perfograph::io
