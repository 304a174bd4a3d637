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

#include "perfograph/transform/passes.hpp"

#include "perfograph/embedding/digits.hpp"
#include "perfograph/errors.hpp"
#include "perfograph/graph/builder.hpp"
#include "perfograph/ir/parser.hpp"

#include <map>
#include <set>
#include <unordered_map>

namespace perfograph::transform {

using graph::Edge;
using graph::EdgeKind;
using graph::Node;
using graph::NodeAttrs;
using graph::NodeId;
using graph::NodeKind;

void TransformConfig::validate() const {
  if (store_modify_edges && !unify_identifiers)
    throw ConfigError("store-modify edges require identifier unification");
}

namespace {

/// (function or "" for module scope, spelling such as "%x" or "@g")
using MemoryKey = std::pair<std::string, std::string>;

std::set<MemoryKey> memory_identifiers(const ir::IrModule &module) {
  std::set<MemoryKey> keys;
  for (const auto &fn : module.functions)
    for (const auto &block : fn.blocks)
      for (const auto &inst : block.instructions)
        if (inst.opcode == "alloca" && !inst.is_opaque && inst.result)
          keys.emplace(fn.name, "%" + *inst.result);
  for (const auto &g : module.globals)
    keys.emplace("", "@" + g.name);
  return keys;
}

MemoryKey key_of(const Node &n) {
  return {n.attrs.function.value_or(""), n.attrs.full_text};
}

/// Memory Variable node for each identifier: the one with the smallest
/// source_order.
std::map<MemoryKey, NodeId> memory_nodes(const ProgramGraph &g,
                                         const std::set<MemoryKey> &keys) {
  std::map<MemoryKey, NodeId> out;
  for (NodeId id = 0; id < g.node_count(); ++id) {
    const Node &n = g.node(id);
    if (n.kind != NodeKind::Variable)
      continue;
    auto key = key_of(n);
    if (!keys.count(key))
      continue;
    auto [it, inserted] = out.emplace(std::move(key), id);
    if (!inserted &&
        n.attrs.source_order < g.node(it->second).attrs.source_order)
      it->second = id;
  }
  return out;
}

/// Rebuilds `g` with every node i folded into target[i]. Kept nodes have
/// target[i] == i. Edges that become identical are merged.
ProgramGraph merge_nodes(const ProgramGraph &g, const std::vector<NodeId> &target) {
  ProgramGraph out(g.module_name());
  std::vector<NodeId> new_id(g.node_count(), 0);
  for (NodeId id = 1; id < g.node_count(); ++id) {
    if (target[id] == id)
      new_id[id] = out.add_node(g.node(id).kind, g.node(id).attrs);
  }
  for (NodeId id = 1; id < g.node_count(); ++id)
    if (target[id] != id)
      new_id[id] = new_id[target[id]];
  for (const Edge &e : g.edges())
    out.add_edge_if_absent({new_id[e.src], new_id[e.dst], e.kind, e.position});
  return out;
}

} // namespace

ProgramGraph unify_identifier_nodes(const ProgramGraph &graph,
                                    const ir::IrModule &module) {
  const auto keys = memory_identifiers(module);
  const auto reps = memory_nodes(graph, keys);
  std::vector<NodeId> target(graph.node_count());
  for (NodeId id = 0; id < graph.node_count(); ++id) {
    target[id] = id;
    const Node &n = graph.node(id);
    if (n.kind != NodeKind::Variable)
      continue;
    if (auto it = reps.find(key_of(n)); it != reps.end())
      target[id] = it->second;
  }
  return merge_nodes(graph, target);
}

ProgramGraph add_store_modify_edges(const ProgramGraph &graph,
                                    const ir::IrModule &module) {
  const auto keys = memory_identifiers(module);
  const auto reps = memory_nodes(graph, keys);

  std::unordered_map<std::string, std::unordered_map<std::string, const ir::IrInstruction *>>
      defs;
  for (const auto &fn : module.functions) {
    auto &table = defs[fn.name];
    for (const auto &block : fn.blocks)
      for (const auto &inst : block.instructions)
        if (inst.result)
          table.emplace(*inst.result, &inst);
  }

  // Walks getelementptr bases back to an alloca or global.
  auto resolve_root = [&](const std::string &function,
                          std::string name) -> std::optional<MemoryKey> {
    const auto fit = defs.find(function);
    if (fit == defs.end())
      return std::nullopt;
    for (std::size_t guard = 0; guard < 1024; ++guard) {
      const auto it = fit->second.find(name);
      if (it == fit->second.end())
        return std::nullopt;
      const ir::IrInstruction &def = *it->second;
      if (def.is_opaque)
        return std::nullopt;
      if (def.opcode == "alloca")
        return MemoryKey{function, "%" + name};
      if (def.opcode != "getelementptr" || def.operands.empty())
        return std::nullopt;
      const auto &base = def.operands.front();
      if (base.kind == ir::OperandKind::GlobalRef && module.find_global(base.text))
        return MemoryKey{"", "@" + base.text};
      if (base.kind != ir::OperandKind::LocalRef)
        return std::nullopt;
      name = base.text;
    }
    return std::nullopt;
  };

  std::unordered_map<NodeId, NodeId> pointer_of;
  for (const Edge &e : graph.edges())
    if (e.kind == EdgeKind::Data && e.position == 1)
      pointer_of[e.dst] = e.src;

  ProgramGraph out = graph.clone();
  for (NodeId id = 0; id < graph.node_count(); ++id) {
    const Node &n = graph.node(id);
    if (n.kind != NodeKind::Instruction || n.attrs.text_token != "store")
      continue;
    const auto pit = pointer_of.find(id);
    if (pit == pointer_of.end())
      continue;
    NodeId dest = pit->second;
    const Node &ptr = graph.node(dest);
    if (ptr.kind == NodeKind::Variable) {
      const auto key = key_of(ptr);
      std::optional<MemoryKey> root;
      if (keys.count(key))
        root = key;
      else if (ptr.attrs.function && key.second.starts_with('%'))
        root = resolve_root(*ptr.attrs.function, key.second.substr(1));
      if (root) {
        if (auto rit = reps.find(*root); rit != reps.end())
          dest = rit->second;
      }
    }
    out.add_edge_if_absent({id, dest, EdgeKind::StoreModify, 0});
  }
  return out;
}

ProgramGraph attach_numeric_values(const ProgramGraph &graph) {
  ProgramGraph out = graph.clone();
  for (NodeId id = 0; id < graph.node_count(); ++id) {
    const Node &n = graph.node(id);
    if (n.kind != NodeKind::Constant ||
        !embedding::is_numeric_literal(n.attrs.full_text))
      continue;
    NodeAttrs a = n.attrs;
    a.numeric_value = a.full_text;
    a.digit_tokens = embedding::tokenize_numeric(a.full_text);
    out.set_attrs(id, std::move(a));
  }
  return out;
}

ProgramGraph expand_aggregate_types(const ProgramGraph &graph,
                                    const ir::IrModule &module) {
  (void)module; // the type text on each Variable node is sufficient
  ProgramGraph out = graph.clone();
  std::uint64_t order = graph.max_source_order() + 1;
  std::map<std::string, std::optional<ir::PeeledType>, std::less<>> cache;

  for (NodeId id = 0; id < graph.node_count(); ++id) {
    const Node &n = graph.node(id);
    if (n.kind != NodeKind::Variable || !n.attrs.type_string)
      continue;
    auto it = cache.find(*n.attrs.type_string);
    if (it == cache.end()) {
      std::optional<ir::PeeledType> peeled;
      try {
        peeled = ir::peel_aggregate_dims(ir::parse_type(*n.attrs.type_string));
      } catch (const Error &) {
      }
      it = cache.emplace(*n.attrs.type_string, std::move(peeled)).first;
    }
    if (!it->second || it->second->dims.empty())
      continue;
    const auto &dims = it->second->dims;

    NodeId prev = id;
    for (std::size_t d = 0; d < dims.size(); ++d) {
      NodeAttrs a;
      const std::string context = ir::type_to_string(dims[d].context);
      const std::string element = d + 1 < dims.size()
                                      ? ir::type_to_string(dims[d + 1].context)
                                      : ir::type_to_string(it->second->base);
      a.text_token = element;
      a.full_text = context;
      a.type_string = context;
      a.dim_length = dims[d].length;
      a.element_type = element;
      a.function = n.attrs.function;
      a.source_order = order++;
      const NodeId dim = out.add_node(NodeKind::AggregateDim, std::move(a));
      out.add_edge({prev, dim, EdgeKind::TypeChain, 0});
      prev = dim;
    }
  }
  return out;
}

ProgramGraph build_perfograph(const ir::IrModule &module,
                              const TransformConfig &config) {
  config.validate();
  ProgramGraph g = graph::build_base_graph(module);
  if (config.unify_identifiers)
    g = unify_identifier_nodes(g, module);
  if (config.store_modify_edges)
    g = add_store_modify_edges(g, module);
  if (config.numeric_values)
    g = attach_numeric_values(g);
  if (config.aggregate_chains)
    g = expand_aggregate_types(g, module);
  g.freeze();
  return g;
}

} // namespace perfograph::transform
