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
#include "perfograph/graph/builder.hpp"
#include "perfograph/io/json.hpp"
#include "perfograph/ir/parser.hpp"
#include "perfograph/transform/passes.hpp"

#include "golden.hpp"
#include "random_ir.hpp"

#include <gtest/gtest.h>

namespace perfograph::io {
namespace {

graph::ProgramGraph nested_array() {
  return transform::build_perfograph(
      ir::parse_module(testing::read_data("nested_array.ll"), ir::ParseMode::Strict, "nested_array")
          .module);
}

TEST(Json, GoldenRoundTrip) {
  for (const auto &g : {testing::iplusplus_base_oracle(), testing::iplusplus_perfograph_oracle(),
                        nested_array()}) {
    const std::string text = to_json(g);
    const auto back = from_json(text);
    EXPECT_TRUE(graph::graphs_equal(g, back));
    EXPECT_EQ(back.module_name(), g.module_name());
    EXPECT_EQ(to_json(back), text);
  }
}

TEST(Json, RandomRoundTripProperty) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto m = ir::parse_module(testing::random_module(seed)).module;
    for (const auto &g : {graph::build_base_graph(m), transform::build_perfograph(m)})
      EXPECT_TRUE(graph::graphs_equal(g, from_json(to_json(g)))) << seed;
  }
}

TEST(Json, DocumentShape) {
  const std::string text = to_json(testing::iplusplus_perfograph_oracle());
  EXPECT_EQ(text.rfind("{\n  \"format_version\": 1,\n  \"module_name\": \"iplusplus\",", 0), 0u);
  EXPECT_EQ(text.back(), '\n');
  EXPECT_NE(text.find("\"digit_tokens\": [\n"), std::string::npos);
  EXPECT_EQ(text.find('\r'), std::string::npos);
}

TEST(Json, TruncatedDocument) {
  const std::string text = to_json(testing::iplusplus_perfograph_oracle());
  EXPECT_THROW(from_json(text.substr(0, text.size() / 2)), SchemaError);
  EXPECT_THROW(from_json(""), SchemaError);
}

TEST(Json, UnknownVersion) {
  std::string text = to_json(testing::iplusplus_perfograph_oracle());
  text.replace(text.find("\"format_version\": 1"), 19, "\"format_version\": 2");
  try {
    from_json(text);
    FAIL() << "expected SchemaError";
  } catch (const SchemaError &e) {
    EXPECT_EQ(e.field(), "graph.format_version");
  }
}

TEST(Json, FieldErrors) {
  EXPECT_THROW(from_json(R"({"format_version": 1, "module_name": "m", "nodes": []})"),
               SchemaError);
  const char *bad_kind = R"({"format_version": 1, "module_name": "m",
    "nodes": [{"id": 0, "kind": "external", "text_token": "[external]",
               "full_text": "[external]", "source_order": 0},
              {"id": 1, "kind": "gizmo", "text_token": "x", "full_text": "x",
               "source_order": 1}],
    "edges": []})";
  try {
    from_json(bad_kind);
    FAIL() << "expected SchemaError";
  } catch (const SchemaError &e) {
    EXPECT_EQ(e.field(), "graph.nodes[1].kind");
  }
  const char *bad_edge = R"({"format_version": 1, "module_name": "m",
    "nodes": [{"id": 0, "kind": "external", "text_token": "[external]",
               "full_text": "[external]", "source_order": 0}],
    "edges": [{"src": 0, "dst": 7, "kind": "data", "position": 0}]})";
  EXPECT_THROW(from_json(bad_edge), SchemaError);
  const char *bad_attr = R"({"format_version": 1, "module_name": "m",
    "nodes": [{"id": 0, "kind": "external", "text_token": "[external]",
               "full_text": "[external]", "source_order": 0},
              {"id": 1, "kind": "instruction", "text_token": "ret",
               "full_text": "ret void", "numeric_value": "1", "function": "f",
               "source_order": 1}],
    "edges": []})";
  EXPECT_THROW(from_json(bad_attr), SchemaError);
}

} // namespace
} // namespace perfograph::io
