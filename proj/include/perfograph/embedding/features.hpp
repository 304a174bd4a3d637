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

namespace perfograph::embedding {

inline constexpr std::size_t kDefaultFeatureDim = 120;

/// [token(text_token), numeric slot, type slot], each table.dim() wide.
///
/// The numeric slot is embed_number(numeric_value) when the node carries a
/// numeric value and zeros otherwise. The type slot is token(type_string)
/// or zeros. Throws ConfigError unless out_dim == 3 * table.dim().
Vector node_feature_vector(const graph::NodeAttrs &node,
                           const EmbeddingTable &table,
                           Aggregation agg = Aggregation::Mean,
                           std::size_t out_dim = kDefaultFeatureDim);

/// One feature row per node, in node id order.
Matrix graph_features(const graph::ProgramGraph &graph,
                      const EmbeddingTable &table,
                      Aggregation agg = Aggregation::Mean,
                      std::size_t out_dim = kDefaultFeatureDim);

} // namespace perfograph::embedding
