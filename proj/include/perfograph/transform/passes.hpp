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

#include "perfograph/graph/program_graph.hpp"
#include "perfograph/ir/module.hpp"

namespace perfograph::transform {

using graph::ProgramGraph;

struct TransformConfig {
  bool unify_identifiers = true;
  bool store_modify_edges = true;
  bool numeric_values = true;
  bool aggregate_chains = true;

  /// Throws ConfigError when store_modify_edges is set without
  /// unify_identifiers.
  void validate() const;

  friend bool operator==(const TransformConfig &, const TransformConfig &) = default;
};

/// Collapses all reference nodes of one memory identifier into a single
/// Variable node.
///
/// A memory identifier is an alloca result (keyed by function and name) or
/// a global variable (module-wide). The surviving node is the one with the
/// smallest source_order, i.e. the alloca's own result node. Other SSA
/// values are left alone. Applying the pass twice is the same as once.
ProgramGraph unify_identifier_nodes(const ProgramGraph &graph,
                                    const ir::IrModule &module);

/// Adds a StoreModify edge from every `store` to the node of the memory
/// it writes.
///
/// The destination is the store's pointer operand (Data position 1). When
/// that pointer is a getelementptr chain whose root is statically an alloca
/// or a global, the edge goes to the root's Variable node instead.
ProgramGraph add_store_modify_edges(const ProgramGraph &graph,
                                    const ir::IrModule &module);

/// Sets numeric_value and digit_tokens on every Constant whose literal is
/// numeric. Other constants are untouched.
ProgramGraph attach_numeric_values(const ProgramGraph &graph);

/// Adds one AggregateDim node per array/vector dimension of each Variable's
/// type, chained Variable -> outermost -> ... -> innermost with TypeChain
/// edges.
ProgramGraph expand_aggregate_types(const ProgramGraph &graph,
                                    const ir::IrModule &module);

/// Base graph followed by the enabled passes, in the order unify,
/// store-modify, numeric, aggregate.
ProgramGraph build_perfograph(const ir::IrModule &module,
                              const TransformConfig &config = {});

} // namespace perfograph::transform
