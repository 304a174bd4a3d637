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

namespace perfograph::graph {

/// Builds the untransformed program graph of a module.
///
/// - One Instruction node per instruction (text_token = opcode).
/// - One Variable node per parameter and per instruction result, with a
///   Data edge from the instruction to its result.
/// - Every use of an alloca result or a global variable gets its own
///   Variable node. This is the separate-node-per-reference shape that
///   unify_identifier_nodes later collapses.
/// - One Constant node per distinct (literal, type) per function.
/// - Control edges between consecutive instructions and from terminators
///   to the first instruction of each successor (position = successor
///   index); Data edges from operands (position = operand index).
/// - Call edges from a call to the callee's entry instruction and from
///   each callee `ret` back to the call; calls to anything without a body
///   go to and from the External node.
///
/// Throws UnresolvedReference for an operand naming an undefined local or
/// global.
ProgramGraph build_base_graph(const ir::IrModule &module);

} // namespace perfograph::graph
