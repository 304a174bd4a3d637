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

#include <string>

namespace perfograph::io {

struct DotStyle {
  /// Label instructions with their full text instead of the opcode.
  bool full_text_labels = false;
};

/// Graphviz digraph. Instructions are blue boxes, variables and constants
/// red ellipses, aggregate dimensions white filled boxes. Control edges are
/// blue, data red, call green, store-modify dashed, type-chain dotted.
std::string to_dot(const graph::ProgramGraph &graph, const DotStyle &style = {});

} // namespace perfograph::io
