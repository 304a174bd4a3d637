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
#include "perfograph/io/bundle.hpp"
#include "perfograph/io/files.hpp"
#include "perfograph/ir/parser.hpp"
#include "perfograph/transform/passes.hpp"

#include "golden.hpp"
#include "random_ir.hpp"

#include <gtest/gtest.h>

#include <unistd.h>

namespace perfograph::io {
namespace {

namespace fs = std::filesystem;
using graph::EdgeKind;
using graph::NodeKind;

fs::path scratch(const std::string &name) {
  const fs::path p = fs::temp_directory_path() /
                     ("pg_bundle_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

graph::ProgramGraph build(const std::string &src) {
  return transform::build_perfograph(ir::parse_module(src).module);
}

TEST(Bundle, IPlusPlusRelations) {
  const auto g = testing::iplusplus_perfograph_oracle();
  const auto vocab = build_vocab(std::span(&g, 1));
  const auto b = to_hetero_bundle(g, vocab);
  const Relation sm{NodeKind::Instruction, EdgeKind::StoreModify, NodeKind::Variable};
  ASSERT_TRUE(b.edge_tables.count(sm));
  EXPECT_EQ(b.edge_tables.at(sm).size(), 2u);
  EXPECT_EQ(sm.name(), "instruction__store_modify__variable");
  EXPECT_EQ(b.node_count(), g.node_count());
  EXPECT_EQ(b.nodes(NodeKind::Variable).size(), 3u);
  for (const auto &[rel, edges] : b.edge_tables)
    EXPECT_FALSE(edges.empty()) << rel.name();
  for (const auto &rec : b.nodes(NodeKind::Instruction)) {
    EXPECT_EQ(vocab.tokens().at(static_cast<std::size_t>(rec.token_id)), rec.attrs.text_token);
    EXPECT_FALSE(rec.type_id);
  }
}

TEST(Bundle, NoConstantsNoConstantRelation) {
  const auto g = build("define void @f(i32* %p, i32 %v) {\n  store i32 %v, i32* %p\n  ret void\n}\n");
  const auto b = to_hetero_bundle(g, build_vocab(std::span(&g, 1)));
  EXPECT_TRUE(b.nodes(NodeKind::Constant).empty());
  EXPECT_FALSE(
      b.edge_tables.count({NodeKind::Constant, EdgeKind::Data, NodeKind::Instruction}));
}

TEST(Bundle, ReconstructionIsLossless) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = build(testing::random_module(seed));
    const auto b = to_hetero_bundle(g, build_vocab(std::span(&g, 1)));
    std::size_t total = 0;
    for (auto k : graph::kAllNodeKinds)
      total += b.nodes(k).size();
    EXPECT_EQ(total, g.node_count());
    std::size_t edges = 0;
    for (const auto &[rel, list] : b.edge_tables)
      edges += list.size();
    EXPECT_EQ(edges, g.edge_count());
    EXPECT_TRUE(graph::graphs_equal(from_hetero_bundle(b), g)) << seed;
  }
}

TEST(Bundle, WriteReadRoundTrip) {
  const auto g = build(testing::read_data("nested_array.ll"));
  const auto vocab = build_vocab(std::span(&g, 1));
  BundleMeta meta{"nested_array", "nested_array.ll", {}, checksum(vocab_to_json(vocab))};
  const auto b = to_hetero_bundle(g, vocab, meta);
  const fs::path dir = scratch("rt");
  write_bundle(b, dir);
  EXPECT_TRUE(fs::exists(dir / "manifest.json"));
  EXPECT_TRUE(fs::exists(dir / "aggregate_dim.nodes.json"));
  EXPECT_TRUE(fs::exists(dir / "variable__type_chain__aggregate_dim.edges.json"));
  EXPECT_TRUE(fs::exists(dir / "aggregate_dim__type_chain__aggregate_dim.edges.json"));
  const auto back = read_bundle(dir);
  EXPECT_EQ(back, b);
  EXPECT_TRUE(graph::graphs_equal(from_hetero_bundle(back), g));
  fs::remove_all(dir);
}

TEST(Bundle, ReadErrors) {
  EXPECT_THROW(read_bundle(scratch("missing")), IoError);
  const auto g = testing::iplusplus_perfograph_oracle();
  const fs::path dir = scratch("bad");
  write_bundle(to_hetero_bundle(g, build_vocab(std::span(&g, 1))), dir);
  std::string manifest = read_file(dir / "manifest.json");
  manifest.replace(manifest.find("\"variable\": 3"), 13, "\"variable\": 4");
  write_file(dir / "manifest.json", manifest);
  EXPECT_THROW(read_bundle(dir), SchemaError);
  fs::remove_all(dir);
}

TEST(Bundle, ClosedVocabMiss) {
  const auto g = testing::iplusplus_perfograph_oracle();
  Vocab v = vocab_from_counts({{"store", 1}}, 1);
  EXPECT_NO_THROW(to_hetero_bundle(g, v));
  v.closed = true;
  EXPECT_THROW(to_hetero_bundle(g, v), VocabMiss);
}

} // namespace
} // namespace perfograph::io
