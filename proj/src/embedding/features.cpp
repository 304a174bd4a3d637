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

namespace perfograph::embedding {

Vector node_feature_vector(const graph::NodeAttrs &node,
                           const EmbeddingTable &table, Aggregation agg,
                           std::size_t out_dim) {
  const std::size_t k = table.dim();
  if (out_dim != 3 * k)
    throw ConfigError("feature width " + std::to_string(out_dim) +
                      " must be three times the embedding dimension " +
                      std::to_string(k));
  Vector out(out_dim, 0.0f);
  const auto tok = table.token(node.text_token);
  std::copy(tok.begin(), tok.end(), out.begin());
  if (node.numeric_value) {
    const Vector num = embed_number(*node.numeric_value, table, agg);
    std::copy(num.begin(), num.end(), out.begin() + k);
  }
  if (node.type_string) {
    const auto ty = table.token(*node.type_string);
    std::copy(ty.begin(), ty.end(), out.begin() + 2 * k);
  }
  return out;
}

Matrix graph_features(const graph::ProgramGraph &graph,
                      const EmbeddingTable &table, Aggregation agg,
                      std::size_t out_dim) {
  Matrix m{graph.node_count(), out_dim, {}};
  m.data.reserve(m.rows * m.cols);
  for (const auto &n : graph.nodes()) {
    const Vector v = node_feature_vector(n.attrs, table, agg, out_dim);
    m.data.insert(m.data.end(), v.begin(), v.end());
  }
  return m;
}

} // namespace perfograph::embedding
