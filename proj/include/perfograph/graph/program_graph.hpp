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
#include "perfograph/ir/types.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace perfograph::graph {

enum class NodeKind : std::uint8_t {
  Instruction,
  Variable,
  Constant,
  AggregateDim,
  External,
};
inline constexpr std::size_t kNodeKindCount = 5;
inline constexpr std::array<NodeKind, kNodeKindCount> kAllNodeKinds = {
    NodeKind::Instruction, NodeKind::Variable, NodeKind::Constant,
    NodeKind::AggregateDim, NodeKind::External};

enum class EdgeKind : std::uint8_t {
  Control,
  Data,
  Call,
  StoreModify,
  TypeChain,
};
inline constexpr std::size_t kEdgeKindCount = 5;
inline constexpr std::array<EdgeKind, kEdgeKindCount> kAllEdgeKinds = {
    EdgeKind::Control, EdgeKind::Data, EdgeKind::Call, EdgeKind::StoreModify,
    EdgeKind::TypeChain};

/// Lower snake case names used in files: "instruction", "aggregate_dim",
/// "store_modify", ...
std::string_view to_string(NodeKind kind);
std::string_view to_string(EdgeKind kind);
std::optional<NodeKind> parse_node_kind(std::string_view s);
std::optional<EdgeKind> parse_edge_kind(std::string_view s);

using NodeId = std::uint32_t;

struct NodeAttrs {
  std::string text_token; ///< opcode, type, or marker token
  std::string full_text;
  std::optional<std::string> type_string;
  std::optional<std::string> numeric_value; ///< verbatim literal
  std::optional<embedding::DigitTokenSeq> digit_tokens;
  std::optional<ir::DimLength> dim_length;
  std::optional<std::string> element_type;
  std::optional<std::string> function;
  std::uint64_t source_order = 0;

  friend auto operator<=>(const NodeAttrs &, const NodeAttrs &) = default;
};

struct Node {
  NodeKind kind;
  NodeAttrs attrs;
};

struct Edge {
  NodeId src;
  NodeId dst;
  EdgeKind kind;
  std::uint32_t position = 0;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Typed multigraph of one module.
///
/// Node ids are dense and assigned in insertion order. Node 0 is the single
/// External node, created by the constructor. Nodes are never deleted;
/// passes build a new graph instead. Edges are unique per
/// (src, dst, kind, position).
class ProgramGraph {
public:
  explicit ProgramGraph(std::string module_name = "");

  /// Throws InvariantViolation if `attrs` break the per-kind rules or if
  /// `kind` is External.
  NodeId add_node(NodeKind kind, NodeAttrs attrs);

  /// Throws InvariantViolation for unknown endpoints or a duplicate edge.
  void add_edge(const Edge &edge);
  /// Like add_edge but silently ignores duplicates. Returns true if added.
  bool add_edge_if_absent(const Edge &edge);
  bool contains_edge(const Edge &edge) const;

  /// Replaces the attributes of an existing node, re-checking invariants.
  void set_attrs(NodeId id, NodeAttrs attrs);

  const Node &node(NodeId id) const { return nodes_.at(id); }
  std::span<const Node> nodes() const { return nodes_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  static constexpr NodeId external_node() { return 0; }

  const std::string &module_name() const { return module_name_; }
  void set_module_name(std::string name) { module_name_ = std::move(name); }

  /// After freezing, every mutator throws InvariantViolation.
  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }
  /// Copy that is open for mutation again.
  ProgramGraph clone() const {
    ProgramGraph g = *this;
    g.frozen_ = false;
    return g;
  }

  /// Highest source_order in use.
  std::uint64_t max_source_order() const;

private:
  void check_mutable() const;

  std::string module_name_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::set<Edge> edge_set_;
  bool frozen_ = false;
};

/// Checks the per-kind attribute rules; throws InvariantViolation.
void validate_node(NodeKind kind, const NodeAttrs &attrs);

/// Equality after canonical renumbering: nodes are ordered by
/// (kind, source_order, text_token, remaining attributes) and edges are
/// compared as multisets of renumbered quadruples. Module names are
/// ignored.
bool graphs_equal(const ProgramGraph &a, const ProgramGraph &b);

struct GraphStats {
  std::array<std::size_t, kNodeKindCount> nodes{};
  std::array<std::size_t, kEdgeKindCount> edges{};
  std::size_t max_degree = 0; ///< in + out, over all edge kinds

  std::size_t count(NodeKind k) const {
    return nodes[static_cast<std::size_t>(k)];
  }
  std::size_t count(EdgeKind k) const {
    return edges[static_cast<std::size_t>(k)];
  }
};

GraphStats stats(const ProgramGraph &graph);

} // namespace perfograph::graph
