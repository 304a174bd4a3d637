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

#include "perfograph/io/dot.hpp"
#include "perfograph/ir/parser.hpp"
#include "perfograph/transform/passes.hpp"

#include "dot_check.hpp"
#include "golden.hpp"
#include "random_ir.hpp"

#include <gtest/gtest.h>

namespace perfograph::io {
namespace {

graph::ProgramGraph build(const std::string &src, const std::string &name = "module") {
  return transform::build_perfograph(
      ir::parse_module(src, ir::ParseMode::Strict, name).module);
}

TEST(Dot, EmptyFunctionParses) {
  const auto g = build("define void @f() {\n  ret void\n}\n");
  const auto d = testing::parse_dot(to_dot(g));
  EXPECT_TRUE(d.directed);
  EXPECT_EQ(d.nodes.size(), 2u);
  EXPECT_TRUE(d.edges.empty());
}

TEST(Dot, NestedArrayHasThreeWhiteAggregateBoxes) {
  const auto d = testing::parse_dot(to_dot(build(testing::read_data("nested_array.ll"))));
  std::size_t white = 0;
  for (const auto &[id, attrs] : d.nodes)
    if (attrs.count("fillcolor") && attrs.at("fillcolor") == "white") {
      ++white;
      EXPECT_EQ(attrs.at("shape"), "box");
      EXPECT_EQ(attrs.at("style"), "filled");
    }
  EXPECT_EQ(white, 3u);
  std::size_t dotted = 0;
  for (const auto &e : d.edges)
    dotted += e.attrs.count("style") && e.attrs.at("style") == "dotted";
  EXPECT_EQ(dotted, 3u);
}

TEST(Dot, IPlusPlusGolden) {
  const std::string text = to_dot(build(testing::read_data("iplusplus.ll"), "iplusplus"));
  EXPECT_EQ(text, testing::read_data("iplusplus.dot"));
  const auto d = testing::parse_dot(text);
  std::map<std::string, std::size_t> dashed_into;
  for (const auto &e : d.edges)
    if (e.attrs.count("style") && e.attrs.at("style") == "dashed")
      ++dashed_into[e.dst];
  ASSERT_EQ(dashed_into.size(), 1u);
  EXPECT_EQ(dashed_into.begin()->second, 2u);
  EXPECT_EQ(d.nodes.at(dashed_into.begin()->first).at("label"), "%i");
}

TEST(Dot, ColoursFollowKinds) {
  const auto d = testing::parse_dot(to_dot(testing::iplusplus_perfograph_oracle()));
  for (const auto &[id, attrs] : d.nodes) {
    if (attrs.at("label") == "store")
      EXPECT_EQ(attrs.at("color"), "blue");
    if (attrs.at("label") == "%inc" || attrs.at("label") == "0")
      EXPECT_EQ(attrs.at("color"), "red");
  }
}

TEST(Dot, EscapingAndDeterminism) {
  const char *src = R"(
@.s = private constant [3 x i8] c"\22a\00"
define void @f() {
  %p = getelementptr inbounds [3 x i8], [3 x i8]* @.s, i64 0, i64 0
  ret void
}
)";
  const auto g = build(src);
  const std::string a = to_dot(g, {true});
  EXPECT_EQ(a, to_dot(g, {true}));
  EXPECT_NO_THROW(testing::parse_dot(a));
}

TEST(Dot, RandomGraphsParse) {
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    EXPECT_NO_THROW(testing::parse_dot(to_dot(build(testing::random_module(seed)), {true})))
        << seed;
}

TEST(DotChecker, RejectsMalformedInput) {
  EXPECT_THROW(testing::parse_dot("digraph {"), std::runtime_error);
  EXPECT_THROW(testing::parse_dot("digraph { a -- b }"), std::runtime_error);
  EXPECT_THROW(testing::parse_dot("graph { a [label=] }"), std::runtime_error);
  EXPECT_THROW(testing::parse_dot("digraph { \"a }"), std::runtime_error);
  EXPECT_NO_THROW(testing::parse_dot("strict digraph g { rankdir=LR; a -> b -> c [color=red] }"));
}

} // namespace
} // namespace perfograph::io
