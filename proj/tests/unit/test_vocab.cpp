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
#include "perfograph/io/vocab.hpp"
#include "perfograph/ir/parser.hpp"
#include "perfograph/transform/passes.hpp"

#include "golden.hpp"
#include "random_ir.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace perfograph::io {
namespace {

TEST(Vocab, EmptyCorpus) {
  const Vocab v = build_vocab({}, 1);
  EXPECT_EQ(v.tokens(), (std::vector<std::string>{"<pad>", "<unk>"}));
  EXPECT_EQ(v.id("anything"), kUnkId);
}

TEST(Vocab, ThresholdAndOrdering) {
  const TokenCounts counts = {{"store", 2}, {"i32", 1}, {"add", 2}, {"ret", 5}};
  const Vocab v = vocab_from_counts(counts, 2);
  EXPECT_EQ(v.tokens(), (std::vector<std::string>{"<pad>", "<unk>", "ret", "add", "store"}));
  EXPECT_EQ(v.id("store"), 4);
  EXPECT_EQ(v.id("i32"), kUnkId);
  EXPECT_FALSE(v.contains("i32"));
}

TEST(Vocab, SingleGraphThreshold) {
  graph::ProgramGraph g;
  graph::NodeAttrs a;
  a.text_token = "store";
  a.function = "f";
  g.add_node(graph::NodeKind::Instruction, a);
  g.add_node(graph::NodeKind::Instruction, a);
  graph::NodeAttrs c;
  c.text_token = "[constant]";
  c.type_string = "i32";
  g.add_node(graph::NodeKind::Constant, c);
  const std::vector<graph::ProgramGraph> corpus = {g};
  const Vocab v = build_vocab(corpus, 2);
  EXPECT_TRUE(v.contains("store"));
  EXPECT_EQ(v.id("i32"), kUnkId);
}

TEST(Vocab, ShuffledCorpusGivesIdenticalVocab) {
  std::vector<graph::ProgramGraph> corpus;
  for (std::uint64_t s = 0; s < 12; ++s)
    corpus.push_back(transform::build_perfograph(
        ir::parse_module(testing::random_module(s)).module));
  const std::string a = vocab_to_json(build_vocab(corpus, 1));
  std::mt19937_64 rng(3);
  for (int round = 0; round < 5; ++round) {
    std::vector<graph::ProgramGraph> shuffled;
    std::vector<std::size_t> order(corpus.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (auto i : order)
      shuffled.push_back(corpus[i].clone());
    EXPECT_EQ(vocab_to_json(build_vocab(shuffled, 1)), a);
  }
}

TEST(Vocab, ClosedModeRaises) {
  Vocab v = vocab_from_counts({{"ret", 1}}, 1);
  v.closed = true;
  EXPECT_EQ(v.id("ret"), 2);
  EXPECT_THROW(v.id("load"), VocabMiss);
}

TEST(Vocab, JsonRoundTrip) {
  Vocab v = vocab_from_counts({{"ret", 3}, {"i32*", 2}}, 1);
  v.seed = 9;
  v.k = 12;
  const std::string text = vocab_to_json(v);
  const Vocab back = vocab_from_json(text);
  EXPECT_EQ(back.tokens(), v.tokens());
  EXPECT_EQ(back.seed, 9u);
  EXPECT_EQ(back.k, 12u);
  EXPECT_EQ(vocab_to_json(back), text);
  EXPECT_THROW(vocab_from_json("{\"format_version\": 1}"), SchemaError);
  EXPECT_THROW(vocab_from_json(R"({"format_version": 1, "seed": 1, "k": 2, "min_count": 1,
                                   "tokens": {"<pad>": 0, "x": 1}})"),
               SchemaError);
}

TEST(Vocab, Checksum) {
  EXPECT_EQ(checksum(""), "cbf29ce484222325");
  EXPECT_EQ(checksum("a"), "af63dc4c8601ec8c");
  EXPECT_NE(checksum("ab"), checksum("ba"));
}

TEST(Vocab, CountsCoverTokensAndTypes) {
  const auto counts = count_tokens(testing::iplusplus_perfograph_oracle());
  EXPECT_EQ(counts.at("store"), 2u);
  EXPECT_EQ(counts.at("i32"), 8u); // 2 variables and 2 constants, token and type each
  EXPECT_EQ(counts.at("i32*"), 2u);
  EXPECT_EQ(counts.count("0"), 0u);
}

} // namespace
} // namespace perfograph::io
