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

#include "perfograph/embedding/features.hpp"
#include "perfograph/errors.hpp"
#include "perfograph/ir/parser.hpp"
#include "perfograph/transform/passes.hpp"

#include "golden.hpp"
#include "random_ir.hpp"

#include <gtest/gtest.h>

namespace perfograph::embedding {
namespace {

std::vector<float> slice(const Vector &v, std::size_t from, std::size_t n) {
  return {v.begin() + static_cast<std::ptrdiff_t>(from),
          v.begin() + static_cast<std::ptrdiff_t>(from + n)};
}

std::vector<float> as_vec(std::span<const float> s) { return {s.begin(), s.end()}; }

TEST(Features, InstructionWithoutType) {
  const EmbeddingTable t(42, 40, {"store", "i32"});
  graph::NodeAttrs a;
  a.text_token = "store";
  a.full_text = "store i32 0, i32* %i";
  a.function = "main";
  const Vector v = node_feature_vector(a, t);
  ASSERT_EQ(v.size(), 120u);
  EXPECT_EQ(slice(v, 0, 40), as_vec(t.token("store")));
  EXPECT_EQ(slice(v, 40, 40), std::vector<float>(40, 0.0f));
  EXPECT_EQ(slice(v, 80, 40), std::vector<float>(40, 0.0f));
}

TEST(Features, NumericConstant) {
  const EmbeddingTable t(42, 40, {"i32"});
  graph::NodeAttrs a;
  a.text_token = "i32";
  a.type_string = "i32";
  a.full_text = "0";
  a.numeric_value = "0";
  a.digit_tokens = tokenize_numeric("0");
  const Vector v = node_feature_vector(a, t);
  EXPECT_EQ(slice(v, 0, 40), as_vec(t.token("i32")));
  std::vector<float> expect(40);
  for (std::size_t d = 0; d < 40; ++d)
    expect[d] = t.symbol('0')[d] + t.position(0)[d];
  EXPECT_EQ(slice(v, 40, 40), expect);
  EXPECT_EQ(slice(v, 80, 40), as_vec(t.token("i32")));
}

TEST(Features, OutOfVocabularyUsesUnk) {
  const EmbeddingTable t(42, 4);
  graph::NodeAttrs a;
  a.text_token = "fneg";
  a.function = "f";
  EXPECT_EQ(slice(node_feature_vector(a, t, Aggregation::Mean, 12), 0, 4),
            as_vec(t.token(kUnkToken)));
}

TEST(Features, WidthMustBeThreeSlots) {
  const EmbeddingTable t(42, 40);
  EXPECT_THROW(node_feature_vector({}, t, Aggregation::Mean, 100), ConfigError);
  const EmbeddingTable small(42, 3);
  EXPECT_EQ(node_feature_vector({}, small, Aggregation::Mean, 9).size(), 9u);
}

TEST(Features, EveryNodeOfRandomGraphsIs120Wide) {
  const EmbeddingTable t;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto m = ir::parse_module(testing::random_module(seed)).module;
    const auto g = transform::build_perfograph(m);
    const Matrix f = graph_features(g, t);
    EXPECT_EQ(f.rows, g.node_count());
    EXPECT_EQ(f.cols, 120u);
    EXPECT_EQ(f.data.size(), f.rows * 120u);
  }
}

} // namespace
} // namespace perfograph::embedding
