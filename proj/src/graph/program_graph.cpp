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

#include "perfograph/graph/program_graph.hpp"

#include "perfograph/errors.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace perfograph::graph {

namespace {

constexpr std::array<std::string_view, kNodeKindCount> kNodeKindNames = {
    "instruction", "variable", "constant", "aggregate_dim", "external"};
constexpr std::array<std::string_view, kEdgeKindCount> kEdgeKindNames = {
    "control", "data", "call", "store_modify", "type_chain"};

} // namespace

std::string_view to_string(NodeKind kind) {
  return kNodeKindNames[static_cast<std::size_t>(kind)];
}

std::string_view to_string(EdgeKind kind) {
  return kEdgeKindNames[static_cast<std::size_t>(kind)];
}

std::optional<NodeKind> parse_node_kind(std::string_view s) {
  for (std::size_t i = 0; i < kNodeKindCount; ++i)
    if (kNodeKindNames[i] == s)
      return static_cast<NodeKind>(i);
  return std::nullopt;
}

std::optional<EdgeKind> parse_edge_kind(std::string_view s) {
  for (std::size_t i = 0; i < kEdgeKindCount; ++i)
    if (kEdgeKindNames[i] == s)
      return static_cast<EdgeKind>(i);
  return std::nullopt;
}

void validate_node(NodeKind kind, const NodeAttrs &attrs) {
  auto fail = [&](const std::string &what) {
    throw InvariantViolation(std::string(to_string(kind)) + " node '" +
                             attrs.text_token + "': " + what);
  };
  if (attrs.numeric_value && kind != NodeKind::Constant)
    fail("only constants carry a numeric value");
  if (attrs.digit_tokens && !attrs.numeric_value)
    fail("digit tokens require a numeric value");
  const bool is_dim = kind == NodeKind::AggregateDim;
  if (is_dim != attrs.dim_length.has_value())
    fail(is_dim ? "missing dim_length" : "dim_length is reserved for aggregate dims");
  if (is_dim != attrs.element_type.has_value())
    fail(is_dim ? "missing element_type"
                : "element_type is reserved for aggregate dims");
  if (kind == NodeKind::Instruction && !attrs.function)
    fail("instruction without a function");
}

ProgramGraph::ProgramGraph(std::string module_name)
    : module_name_(std::move(module_name)) {
  NodeAttrs ext;
  ext.text_token = "[external]";
  ext.full_text = "[external]";
  nodes_.push_back({NodeKind::External, std::move(ext)});
}

void ProgramGraph::check_mutable() const {
  if (frozen_)
    throw InvariantViolation("graph is frozen");
}

NodeId ProgramGraph::add_node(NodeKind kind, NodeAttrs attrs) {
  check_mutable();
  if (kind == NodeKind::External)
    throw InvariantViolation("a graph has exactly one external node");
  validate_node(kind, attrs);
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back({kind, std::move(attrs)});
  return id;
}

bool ProgramGraph::contains_edge(const Edge &edge) const {
  return edge_set_.count(edge) > 0;
}

bool ProgramGraph::add_edge_if_absent(const Edge &edge) {
  check_mutable();
  if (edge.src >= nodes_.size() || edge.dst >= nodes_.size())
    throw InvariantViolation("edge endpoint does not exist");
  if (edge.position != 0 && edge.kind != EdgeKind::Data &&
      edge.kind != EdgeKind::Control)
    throw InvariantViolation(std::string(to_string(edge.kind)) +
                             " edges carry position 0");
  if (!edge_set_.insert(edge).second)
    return false;
  edges_.push_back(edge);
  return true;
}

void ProgramGraph::add_edge(const Edge &edge) {
  if (!add_edge_if_absent(edge))
    throw InvariantViolation("duplicate " + std::string(to_string(edge.kind)) +
                             " edge " + std::to_string(edge.src) + " -> " +
                             std::to_string(edge.dst));
}

void ProgramGraph::set_attrs(NodeId id, NodeAttrs attrs) {
  check_mutable();
  Node &n = nodes_.at(id);
  validate_node(n.kind, attrs);
  n.attrs = std::move(attrs);
}

std::uint64_t ProgramGraph::max_source_order() const {
  std::uint64_t m = 0;
  for (const auto &n : nodes_)
    m = std::max(m, n.attrs.source_order);
  return m;
}

namespace {

// Node ids sorted into canonical order.
std::vector<NodeId> canonical_order(const ProgramGraph &g) {
  std::vector<NodeId> order(g.node_count());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeId x, NodeId y) {
    const Node &a = g.node(x);
    const Node &b = g.node(y);
    return std::tie(a.kind, a.attrs.source_order, a.attrs.text_token, a.attrs) <
           std::tie(b.kind, b.attrs.source_order, b.attrs.text_token, b.attrs);
  });
  return order;
}

} // namespace

bool graphs_equal(const ProgramGraph &a, const ProgramGraph &b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count())
    return false;
  const auto oa = canonical_order(a);
  const auto ob = canonical_order(b);
  std::vector<NodeId> rank_a(a.node_count()), rank_b(b.node_count());
  for (std::size_t i = 0; i < oa.size(); ++i) {
    const Node &na = a.node(oa[i]);
    const Node &nb = b.node(ob[i]);
    if (na.kind != nb.kind || na.attrs != nb.attrs)
      return false;
    rank_a[oa[i]] = static_cast<NodeId>(i);
    rank_b[ob[i]] = static_cast<NodeId>(i);
  }
  auto renumber = [](const ProgramGraph &g, const std::vector<NodeId> &rank) {
    std::vector<Edge> out;
    out.reserve(g.edge_count());
    for (const auto &e : g.edges())
      out.push_back({rank[e.src], rank[e.dst], e.kind, e.position});
    std::sort(out.begin(), out.end());
    return out;
  };
  return renumber(a, rank_a) == renumber(b, rank_b);
}

GraphStats stats(const ProgramGraph &graph) {
  GraphStats s;
  std::vector<std::size_t> degree(graph.node_count(), 0);
  for (const auto &n : graph.nodes())
    ++s.nodes[static_cast<std::size_t>(n.kind)];
  for (const auto &e : graph.edges()) {
    ++s.edges[static_cast<std::size_t>(e.kind)];
    ++degree[e.src];
    ++degree[e.dst];
  }
  if (!degree.empty())
    s.max_degree = *std::max_element(degree.begin(), degree.end());
  return s;
}

} // namespace perfograph::graph
