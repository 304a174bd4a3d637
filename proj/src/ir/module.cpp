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

#include "perfograph/ir/module.hpp"

#include <algorithm>

namespace perfograph::ir {

std::string IrOperand::spelling() const {
  switch (kind) {
  case OperandKind::LocalRef:
    return "%" + text;
  case OperandKind::GlobalRef:
    return "@" + text;
  case OperandKind::BlockLabel:
    return "label %" + text;
  default:
    return text;
  }
}

bool is_terminator_opcode(std::string_view opcode) {
  return opcode == "br" || opcode == "ret" || opcode == "switch" ||
         opcode == "unreachable";
}

bool IrInstruction::is_terminator() const {
  return !is_opaque && is_terminator_opcode(opcode);
}

const IrBlock *IrFunction::find_block(std::string_view label) const {
  auto it = std::find_if(blocks.begin(), blocks.end(),
                         [&](const IrBlock &b) { return b.label == label; });
  return it == blocks.end() ? nullptr : &*it;
}

const IrInstruction *IrFunction::find_definition(std::string_view name) const {
  for (const auto &b : blocks)
    for (const auto &inst : b.instructions)
      if (inst.result && *inst.result == name)
        return &inst;
  return nullptr;
}

bool IrFunction::is_param(std::string_view name) const {
  return std::any_of(params.begin(), params.end(),
                     [&](const IrParam &p) { return p.name == name; });
}

const IrFunction *IrModule::find_function(std::string_view name) const {
  auto it = std::find_if(functions.begin(), functions.end(),
                         [&](const IrFunction &f) { return f.name == name; });
  return it == functions.end() ? nullptr : &*it;
}

const IrGlobal *IrModule::find_global(std::string_view name) const {
  auto it = std::find_if(globals.begin(), globals.end(),
                         [&](const IrGlobal &g) { return g.name == name; });
  return it == globals.end() ? nullptr : &*it;
}

bool IrModule::is_external(std::string_view name) const {
  return std::any_of(
      external_decls.begin(), external_decls.end(),
      [&](const IrExternalDecl &d) { return d.name == name; });
}

} // namespace perfograph::ir
