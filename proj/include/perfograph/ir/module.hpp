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

#include "perfograph/ir/types.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace perfograph::ir {

enum class OperandKind {
  LocalRef,       ///< %x
  GlobalRef,      ///< @g
  NumericLiteral, ///< 42, -1, 1.000000e+00, 0x400921FB54442D18
  UndefOrNull,    ///< null, undef, poison, zeroinitializer, true, false, none
  BlockLabel,     ///< label %bb
  ConstantExpr,   ///< aggregate constants, strings and constant expressions
};

struct IrOperand {
  OperandKind kind = OperandKind::LocalRef;
  /// Identifier without sigil for refs and labels; verbatim spelling for
  /// literals, keywords and constant expressions.
  std::string text;
  TypeRef type; ///< null for block labels
  bool is_hex = false;
  /// Set on constant expressions accepted only by the lenient parser.
  bool is_opaque = false;

  /// Spelling as it appears in the graph: "%x", "@g", "0", "label %bb".
  std::string spelling() const;
};

struct IrInstruction {
  std::optional<std::string> result; ///< local name, no sigil
  std::string opcode;
  std::vector<IrOperand> operands;
  TypeRef result_type;                ///< null when there is no result
  TypeRef element_type; ///< alloca'd type, or getelementptr source type
  std::vector<std::string> successors; ///< block labels, terminators only
  std::vector<std::string> incoming_blocks; ///< phi only, parallel to operands
  std::optional<std::string> callee;        ///< direct calls only
  bool is_opaque = false; ///< unknown opcode kept by the lenient parser
  std::size_t line = 0;
  std::string text; ///< source line without comments

  bool is_terminator() const;
};

bool is_terminator_opcode(std::string_view opcode);

struct IrBlock {
  std::string label; ///< empty for an unnamed entry block
  std::vector<IrInstruction> instructions;
};

struct IrParam {
  std::string name; ///< no sigil
  TypeRef type;
};

struct IrFunction {
  std::string name; ///< no sigil
  TypeRef return_type;
  std::vector<IrParam> params;
  std::vector<IrBlock> blocks;
  bool is_definition = true;

  const IrBlock *find_block(std::string_view label) const;
  /// The instruction defining `name`; null for parameters and unknowns.
  const IrInstruction *find_definition(std::string_view name) const;
  bool is_param(std::string_view name) const;
};

struct IrGlobal {
  std::string name; ///< no sigil
  TypeRef type;     ///< value type; references to it have type `type*`
  std::optional<std::string> initializer;
  bool is_constant = false;
};

struct IrExternalDecl {
  std::string name;
  std::string signature; ///< e.g. "void (i8*, ...)"
};

struct IrNamedType {
  std::string name; ///< with sigil, e.g. "%struct.S"
  std::string body;
};

struct IrModule {
  std::string name;
  std::vector<IrGlobal> globals;
  std::vector<IrFunction> functions;
  std::vector<IrExternalDecl> external_decls;
  std::vector<IrNamedType> named_types;

  const IrFunction *find_function(std::string_view name) const;
  const IrGlobal *find_global(std::string_view name) const;
  bool is_external(std::string_view name) const;
};

} // namespace perfograph::ir
