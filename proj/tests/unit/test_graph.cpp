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

#include "perfograph/errors.hpp"
#include "perfograph/graph/program_graph.hpp"

#include "golden.hpp"

#include <gtest/gtest.h>

namespace perfograph::graph {
namespace {

NodeAttrs inst(const char *op, std::uint64_t order) {
  NodeAttrs a;
  a.text_token = op;
  a.full_text = op;
  a.function = "f";
  a.source_order = order;
  return a;
}

TEST(Graph, ExternalNodeExistsFromTheStart) {
  ProgramGraph g("m");
  ASSERT_EQ(g.node_count(), 1u);
  EXPECT_EQ(g.node(ProgramGraph::external_node()).kind, NodeKind::External);
  EXPECT_THROW(g.add_node(NodeKind::External, {}), InvariantViolation);
}

TEST(Graph, KindNamesRoundTrip) {
  for (NodeKind k : kAllNodeKinds)
    EXPECT_EQ(parse_node_kind(to_string(k)), k);
  for (EdgeKind k : kAllEdgeKinds)
    EXPECT_EQ(parse_edge_kind(to_string(k)), k);
  EXPECT_EQ(to_string(NodeKind::AggregateDim), "aggregate_dim");
  EXPECT_EQ(to_string(EdgeKind::StoreModify), "store_modify");
  EXPECT_FALSE(parse_node_kind("widget"));
}

TEST(Graph, AttributeRulesPerKind) {
  ProgramGraph g;
  NodeAttrs a = inst("add", 1);
  a.numeric_value = "1";
  EXPECT_THROW(g.add_node(NodeKind::Instruction, a), InvariantViolation);

  NodeAttrs c;
  c.text_token = "i32";
  c.full_text = "1";
  c.digit_tokens = embedding::DigitTokenSeq{{'1', 0}};
  EXPECT_THROW(g.add_node(NodeKind::Constant, c), InvariantViolation);
  c.numeric_value = "1";
  EXPECT_NO_THROW(g.add_node(NodeKind::Constant, c));

  NodeAttrs d;
  d.text_token = "float";
  EXPECT_THROW(g.add_node(NodeKind::AggregateDim, d), InvariantViolation);
  d.dim_length = ir::DimLength{4, false};
  d.element_type = "float";
  EXPECT_NO_THROW(g.add_node(NodeKind::AggregateDim, d));
  EXPECT_THROW(g.add_node(NodeKind::Variable, d), InvariantViolation);

  NodeAttrs no_fn;
  no_fn.text_token = "ret";
  EXPECT_THROW(g.add_node(NodeKind::Instruction, no_fn), InvariantViolation);
}

TEST(Graph, EdgeRules) {
  ProgramGraph g;
  const NodeId a = g.add_node(NodeKind::Instruction, inst("a", 1));
  const NodeId b = g.add_node(NodeKind::Instruction, inst("b", 2));
  g.add_edge({a, b, EdgeKind::Control, 0});
  EXPECT_THROW(g.add_edge({a, b, EdgeKind::Control, 0}), InvariantViolation);
  EXPECT_FALSE(g.add_edge_if_absent({a, b, EdgeKind::Control, 0}));
  EXPECT_TRUE(g.add_edge_if_absent({a, b, EdgeKind::Control, 1}));
  EXPECT_THROW(g.add_edge({a, 99, EdgeKind::Data, 0}), InvariantViolation);
  EXPECT_THROW(g.add_edge({a, b, EdgeKind::Call, 2}), InvariantViolation);
  EXPECT_TRUE(g.contains_edge({a, b, EdgeKind::Control, 1}));
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(Graph, FreezeBlocksMutation) {
  ProgramGraph g;
  const NodeId a = g.add_node(NodeKind::Instruction, inst("a", 1));
  g.freeze();
  EXPECT_THROW(g.add_node(NodeKind::Instruction, inst("b", 2)), InvariantViolation);
  EXPECT_THROW(g.add_edge({a, 0, EdgeKind::Call, 0}), InvariantViolation);
  EXPECT_THROW(g.set_attrs(a, inst("c", 3)), InvariantViolation);
  ProgramGraph copy = g.clone();
  EXPECT_NO_THROW(copy.add_edge({a, 0, EdgeKind::Call, 0}));
}

TEST(Graph, EqualityIgnoresInsertionOrder) {
  ProgramGraph x, y;
  const NodeId xa = x.add_node(NodeKind::Instruction, inst("a", 1));
  const NodeId xb = x.add_node(NodeKind::Instruction, inst("b", 2));
  x.add_edge({xa, xb, EdgeKind::Control, 0});
  const NodeId yb = y.add_node(NodeKind::Instruction, inst("b", 2));
  const NodeId ya = y.add_node(NodeKind::Instruction, inst("a", 1));
  y.add_edge({ya, yb, EdgeKind::Control, 0});
  EXPECT_TRUE(graphs_equal(x, y));

  y.add_edge({yb, ya, EdgeKind::Control, 0});
  EXPECT_FALSE(graphs_equal(x, y));
  x.add_edge({xb, xa, EdgeKind::Control, 1});
  EXPECT_FALSE(graphs_equal(x, y));
}

TEST(Graph, EqualityDetectsAttributeChanges) {
  const ProgramGraph a = testing::iplusplus_perfograph_oracle();
  ProgramGraph b = a.clone();
  EXPECT_TRUE(graphs_equal(a, b));
  NodeAttrs changed = b.node(1).attrs;
  changed.full_text += " ";
  b.set_attrs(1, changed);
  EXPECT_FALSE(graphs_equal(a, b));
}

TEST(Graph, Stats) {
  const auto s = stats(testing::iplusplus_perfograph_oracle());
  EXPECT_EQ(s.count(NodeKind::Instruction), 6u);
  EXPECT_EQ(s.count(NodeKind::Variable), 3u);
  EXPECT_EQ(s.count(NodeKind::Constant), 2u);
  EXPECT_EQ(s.count(NodeKind::External), 1u);
  EXPECT_EQ(s.count(EdgeKind::Control), 5u);
  EXPECT_EQ(s.count(EdgeKind::Data), 11u);
  EXPECT_EQ(s.count(EdgeKind::StoreModify), 2u);
  // %i: alloca result, three uses, two store-modify targets.
  EXPECT_EQ(s.max_degree, 6u);
}

} // namespace
} // namespace perfograph::graph
