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

#include "perfograph/embedding/table.hpp"
#include "perfograph/graph/program_graph.hpp"
#include "perfograph/io/vocab.hpp"
#include "perfograph/transform/passes.hpp"

#include <array>
#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace perfograph::io {

/// Settings a bundle was produced with.
struct BundleConfig {
  transform::TransformConfig transform;
  std::uint64_t seed = embedding::kDefaultSeed;
  std::size_t k = embedding::kDefaultDim;
  std::size_t out_dim = 3 * embedding::kDefaultDim;
  embedding::Aggregation aggregation = embedding::Aggregation::Mean;

  friend bool operator==(const BundleConfig &, const BundleConfig &) = default;
};

struct BundleMeta {
  std::string module_name;
  std::string source_path;
  BundleConfig config;
  std::string vocab_ref; ///< checksum of the vocab file

  friend bool operator==(const BundleMeta &, const BundleMeta &) = default;
};

struct BundleNode {
  std::int64_t token_id = kUnkId;
  std::optional<std::int64_t> type_id;
  graph::NodeAttrs attrs;

  friend bool operator==(const BundleNode &, const BundleNode &) = default;
};

struct BundleEdge {
  std::uint32_t src = 0; ///< index within the source kind's table
  std::uint32_t dst = 0; ///< index within the target kind's table
  std::uint32_t position = 0;

  friend auto operator<=>(const BundleEdge &, const BundleEdge &) = default;
};

struct Relation {
  graph::NodeKind src;
  graph::EdgeKind kind;
  graph::NodeKind dst;

  /// "<src>__<kind>__<dst>", e.g. "instruction__store_modify__variable".
  std::string name() const;

  friend auto operator<=>(const Relation &, const Relation &) = default;
};

/// Graph split into one node table per kind and one edge table per
/// (source kind, edge kind, target kind). Node order within a kind follows
/// node ids. Only relations with at least one edge have a table.
struct HeteroBundle {
  BundleMeta meta;
  std::array<std::vector<BundleNode>, graph::kNodeKindCount> node_tables;
  std::map<Relation, std::vector<BundleEdge>> edge_tables;

  const std::vector<BundleNode> &nodes(graph::NodeKind k) const {
    return node_tables[static_cast<std::size_t>(k)];
  }
  std::size_t node_count() const;

  friend bool operator==(const HeteroBundle &, const HeteroBundle &) = default;
};

/// Throws VocabMiss for an unknown token when the vocab is closed.
HeteroBundle to_hetero_bundle(const graph::ProgramGraph &graph, const Vocab &vocab,
                              BundleMeta meta = {});

/// Flat graph with the same nodes and edges (up to renumbering).
graph::ProgramGraph from_hetero_bundle(const HeteroBundle &bundle);

/// Writes manifest.json, <kind>.nodes.json for every kind and
/// <relation>.edges.json for every relation into `dir`.
void write_bundle(const HeteroBundle &bundle, const std::filesystem::path &dir);
/// Throws SchemaError for inconsistent or missing files.
HeteroBundle read_bundle(const std::filesystem::path &dir);

} // namespace perfograph::io
