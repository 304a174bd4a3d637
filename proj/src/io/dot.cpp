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

#include "perfograph/io/dot.hpp"

#include <sstream>

namespace perfograph::io {

namespace {

using graph::EdgeKind;
using graph::NodeKind;

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
    case '"':
      out += "\\\"";
      break;
    case '\\':
      out += "\\\\";
      break;
    case '\n':
      out += "\\n";
      break;
    default:
      out += c;
    }
  }
  return out + "\"";
}

std::string_view node_style(NodeKind kind) {
  switch (kind) {
  case NodeKind::Instruction:
    return "shape=box, color=blue";
  case NodeKind::Variable:
  case NodeKind::Constant:
    return "shape=ellipse, color=red";
  case NodeKind::AggregateDim:
    return "shape=box, style=filled, fillcolor=white";
  case NodeKind::External:
    return "shape=diamond, color=gray40";
  }
  return "";
}

std::string_view edge_style(EdgeKind kind) {
  switch (kind) {
  case EdgeKind::Control:
    return "color=blue";
  case EdgeKind::Data:
    return "color=red";
  case EdgeKind::Call:
    return "color=green";
  case EdgeKind::StoreModify:
    return "style=dashed";
  case EdgeKind::TypeChain:
    return "style=dotted";
  }
  return "";
}

} // namespace

std::string to_dot(const graph::ProgramGraph &graph, const DotStyle &style) {
  std::ostringstream out;
  out << "digraph " << quote(graph.module_name()) << " {\n";
  for (std::size_t id = 0; id < graph.node_count(); ++id) {
    const auto &n = graph.node(static_cast<graph::NodeId>(id));
    const bool use_full = n.kind == NodeKind::Variable ||
                          n.kind == NodeKind::Constant ||
                          n.kind == NodeKind::AggregateDim ||
                          (n.kind == NodeKind::Instruction && style.full_text_labels);
    const std::string &label = use_full ? n.attrs.full_text : n.attrs.text_token;
    out << "  n" << id << " [label=" << quote(label) << ", " << node_style(n.kind)
        << "];\n";
  }
  for (const auto &e : graph.edges()) {
    out << "  n" << e.src << " -> n" << e.dst << " [" << edge_style(e.kind);
    if (e.position != 0)
      out << ", label=\"" << e.position << "\"";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace perfograph::io
