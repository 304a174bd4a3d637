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

#include "perfograph/graph/builder.hpp"

#include "perfograph/errors.hpp"

#include <map>
#include <unordered_map>
#include <unordered_set>

namespace perfograph::graph {

namespace {

using ir::IrFunction;
using ir::IrInstruction;
using ir::IrModule;
using ir::IrOperand;
using ir::OperandKind;

std::optional<std::string> type_text(const ir::TypeRef &t) {
  if (!t)
    return std::nullopt;
  return ir::type_to_string(t);
}

struct FunctionNodes {
  NodeId entry = 0;
  std::vector<NodeId> returns;
};

class Builder {
public:
  explicit Builder(const IrModule &module) : module_(module), g_(module.name) {}

  ProgramGraph run() {
    for (const auto &fn : module_.functions)
      create_nodes(fn);
    for (const auto &fn : module_.functions)
      connect(fn);
    return std::move(g_);
  }

private:
  NodeId add(NodeKind kind, NodeAttrs attrs) {
    attrs.source_order = next_order_++;
    return g_.add_node(kind, std::move(attrs));
  }

  NodeId add_variable(const std::string &spelling, const ir::TypeRef &type,
                      std::optional<std::string> function) {
    NodeAttrs a;
    a.type_string = type_text(type);
    a.text_token = a.type_string.value_or("[variable]");
    a.full_text = spelling;
    a.function = std::move(function);
    return add(NodeKind::Variable, std::move(a));
  }

  void create_nodes(const IrFunction &fn) {
    auto &values = values_[fn.name];
    auto &memory = memory_[fn.name];
    auto &inst_nodes = inst_nodes_[fn.name];
    FunctionNodes info;

    for (const auto &p : fn.params)
      values[p.name] = add_variable("%" + p.name, p.type, fn.name);

    bool first = true;
    for (const auto &block : fn.blocks) {
      auto &nodes = inst_nodes.emplace_back();
      for (const auto &inst : block.instructions) {
        NodeAttrs a;
        a.text_token = inst.opcode;
        a.full_text = inst.text;
        a.function = fn.name;
        const NodeId id = add(NodeKind::Instruction, std::move(a));
        nodes.push_back(id);
        if (first) {
          info.entry = id;
          first = false;
        }
        if (inst.opcode == "ret" && !inst.is_opaque)
          info.returns.push_back(id);
        if (inst.result) {
          const NodeId var =
              add_variable("%" + *inst.result, inst.result_type, fn.name);
          g_.add_edge({id, var, EdgeKind::Data, 0});
          values[*inst.result] = var;
          if (inst.opcode == "alloca" && !inst.is_opaque)
            memory.insert(*inst.result);
        }
      }
    }
    functions_[fn.name] = std::move(info);
  }

  NodeId constant_node(const IrFunction &fn, const IrOperand &op) {
    const auto type = type_text(op.type);
    auto key = std::make_pair(op.spelling(), type.value_or(""));
    auto &table = constants_[fn.name];
    if (auto it = table.find(key); it != table.end())
      return it->second;
    NodeAttrs a;
    a.text_token = type.value_or("[constant]");
    a.full_text = op.spelling();
    a.type_string = type;
    a.function = fn.name;
    const NodeId id = add(NodeKind::Constant, std::move(a));
    table.emplace(std::move(key), id);
    return id;
  }

  NodeId operand_node(const IrFunction &fn, const IrOperand &op) {
    switch (op.kind) {
    case OperandKind::LocalRef: {
      auto &values = values_[fn.name];
      auto it = values.find(op.text);
      if (it == values.end())
        throw UnresolvedReference("%" + op.text + " in @" + fn.name);
      if (!memory_[fn.name].count(op.text))
        return it->second;
      // Fresh reference node for this use of a stack slot.
      const NodeAttrs def = g_.node(it->second).attrs;
      NodeAttrs a;
      a.text_token = def.text_token;
      a.full_text = def.full_text;
      a.type_string = def.type_string;
      a.function = fn.name;
      return add(NodeKind::Variable, std::move(a));
    }
    case OperandKind::GlobalRef: {
      if (const auto *global = module_.find_global(op.text)) {
        ir::TypeRef type = op.type ? op.type : ir::pointer_to(global->type);
        return add_variable("@" + op.text, type, std::nullopt);
      }
      if (module_.find_function(op.text) || module_.is_external(op.text))
        return constant_node(fn, op);
      throw UnresolvedReference("@" + op.text);
    }
    default:
      return constant_node(fn, op);
    }
  }

  void connect(const IrFunction &fn) {
    const auto &inst_nodes = inst_nodes_.at(fn.name);
    std::map<std::string, std::size_t, std::less<>> block_index;
    for (std::size_t b = 0; b < fn.blocks.size(); ++b)
      block_index.emplace(fn.blocks[b].label, b);

    for (std::size_t b = 0; b < fn.blocks.size(); ++b) {
      const auto &block = fn.blocks[b];
      for (std::size_t i = 0; i < block.instructions.size(); ++i) {
        const IrInstruction &inst = block.instructions[i];
        const NodeId node = inst_nodes[b][i];

        if (i + 1 < block.instructions.size())
          g_.add_edge({node, inst_nodes[b][i + 1], EdgeKind::Control, 0});
        for (std::size_t s = 0; s < inst.successors.size(); ++s) {
          const auto it = block_index.find(inst.successors[s]);
          if (it == block_index.end() || inst_nodes[it->second].empty())
            continue;
          g_.add_edge_if_absent({node, inst_nodes[it->second].front(),
                                 EdgeKind::Control,
                                 static_cast<std::uint32_t>(s)});
        }

        for (std::size_t o = 0; o < inst.operands.size(); ++o) {
          const NodeId src = operand_node(fn, inst.operands[o]);
          g_.add_edge_if_absent(
              {src, node, EdgeKind::Data, static_cast<std::uint32_t>(o)});
        }

        if (inst.opcode == "call" && !inst.is_opaque)
          connect_call(node, inst);
      }
    }
  }

  void connect_call(NodeId call, const IrInstruction &inst) {
    const FunctionNodes *callee = nullptr;
    if (inst.callee) {
      if (auto it = functions_.find(*inst.callee); it != functions_.end())
        callee = &it->second;
    }
    if (!callee) {
      const NodeId ext = ProgramGraph::external_node();
      g_.add_edge_if_absent({call, ext, EdgeKind::Call, 0});
      g_.add_edge_if_absent({ext, call, EdgeKind::Call, 0});
      return;
    }
    g_.add_edge_if_absent({call, callee->entry, EdgeKind::Call, 0});
    for (NodeId ret : callee->returns)
      g_.add_edge_if_absent({ret, call, EdgeKind::Call, 0});
  }

  const IrModule &module_;
  ProgramGraph g_;
  std::uint64_t next_order_ = 1;
  std::unordered_map<std::string, std::unordered_map<std::string, NodeId>> values_;
  std::unordered_map<std::string, std::unordered_set<std::string>> memory_;
  std::unordered_map<std::string, std::vector<std::vector<NodeId>>> inst_nodes_;
  std::unordered_map<std::string, FunctionNodes> functions_;
  std::unordered_map<std::string, std::map<std::pair<std::string, std::string>, NodeId>>
      constants_;
};

} // namespace

ProgramGraph build_base_graph(const ir::IrModule &module) {
  return Builder(module).run();
}

} // namespace perfograph::graph
