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

#include "perfograph/io/json.hpp"

#include "json_detail.hpp"
#include "perfograph/errors.hpp"

namespace perfograph::io {

namespace detail {

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception &e) {
    throw SchemaError("document", e.what());
  }
}

void check_version(const Json &doc, const std::string &where) {
  if (!doc.is_object())
    throw SchemaError(where, "expected an object");
  const Json &v = field(doc, "format_version", where);
  if (!v.is_number_integer() || v.get<std::int64_t>() != kFormatVersion)
    throw SchemaError(where + ".format_version",
                      "unsupported version " + v.dump());
}

const Json &field(const Json &j, const std::string &key, const std::string &where) {
  if (!j.is_object())
    throw SchemaError(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end())
    throw SchemaError(where + "." + key, "missing");
  return *it;
}

std::string get_string(const Json &j, const std::string &key, const std::string &where) {
  const Json &v = field(j, key, where);
  if (!v.is_string())
    throw SchemaError(where + "." + key, "expected a string");
  return v.get<std::string>();
}

std::uint64_t get_uint(const Json &j, const std::string &key, const std::string &where) {
  const Json &v = field(j, key, where);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw SchemaError(where + "." + key, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

namespace {

std::optional<std::string> opt_string(const Json &j, const std::string &key,
                                      const std::string &where) {
  if (!j.contains(key))
    return std::nullopt;
  return get_string(j, key, where);
}

} // namespace

Json attrs_to_json(const graph::NodeAttrs &a) {
  Json j = Json::object();
  j["text_token"] = a.text_token;
  j["full_text"] = a.full_text;
  if (a.type_string)
    j["type_string"] = *a.type_string;
  if (a.numeric_value)
    j["numeric_value"] = *a.numeric_value;
  if (a.digit_tokens) {
    Json seq = Json::array();
    for (const auto &t : *a.digit_tokens)
      seq.push_back(Json::array({std::string(1, t.symbol), t.position}));
    j["digit_tokens"] = std::move(seq);
  }
  if (a.dim_length)
    j["dim_length"] = {{"count", a.dim_length->count},
                       {"scalable", a.dim_length->scalable}};
  if (a.element_type)
    j["element_type"] = *a.element_type;
  if (a.function)
    j["function"] = *a.function;
  j["source_order"] = a.source_order;
  return j;
}

graph::NodeAttrs attrs_from_json(const Json &j, const std::string &where) {
  graph::NodeAttrs a;
  a.text_token = get_string(j, "text_token", where);
  a.full_text = get_string(j, "full_text", where);
  a.type_string = opt_string(j, "type_string", where);
  a.numeric_value = opt_string(j, "numeric_value", where);
  if (j.contains("digit_tokens")) {
    const Json &seq = j.at("digit_tokens");
    const std::string w = where + ".digit_tokens";
    if (!seq.is_array())
      throw SchemaError(w, "expected an array");
    embedding::DigitTokenSeq tokens;
    for (const Json &t : seq) {
      if (!t.is_array() || t.size() != 2 || !t[0].is_string() ||
          t[0].get<std::string>().size() != 1 || !t[1].is_number_unsigned())
        throw SchemaError(w, "expected [symbol, position] pairs");
      const char c = t[0].get<std::string>()[0];
      if (!embedding::is_digit_symbol(c))
        throw SchemaError(w, "symbol outside the digit alphabet");
      tokens.push_back({c, t[1].get<std::uint32_t>()});
    }
    a.digit_tokens = std::move(tokens);
  }
  if (j.contains("dim_length")) {
    const Json &d = j.at("dim_length");
    const std::string w = where + ".dim_length";
    const Json &s = field(d, "scalable", w);
    if (!s.is_boolean())
      throw SchemaError(w + ".scalable", "expected a boolean");
    a.dim_length = ir::DimLength{get_uint(d, "count", w), s.get<bool>()};
  }
  a.element_type = opt_string(j, "element_type", where);
  a.function = opt_string(j, "function", where);
  a.source_order = get_uint(j, "source_order", where);
  return a;
}

} // namespace detail

using detail::Json;

std::string to_json(const graph::ProgramGraph &graph) {
  Json doc = Json::object();
  doc["format_version"] = kFormatVersion;
  doc["module_name"] = graph.module_name();
  Json nodes = Json::array();
  for (std::size_t id = 0; id < graph.node_count(); ++id) {
    const auto &n = graph.node(static_cast<graph::NodeId>(id));
    Json j = Json::object();
    j["id"] = id;
    j["kind"] = graph::to_string(n.kind);
    const Json attrs = detail::attrs_to_json(n.attrs);
    for (auto it = attrs.begin(); it != attrs.end(); ++it)
      j[it.key()] = it.value();
    nodes.push_back(std::move(j));
  }
  doc["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const auto &e : graph.edges())
    edges.push_back({{"src", e.src},
                     {"dst", e.dst},
                     {"kind", graph::to_string(e.kind)},
                     {"position", e.position}});
  doc["edges"] = std::move(edges);
  return detail::dump(doc);
}

graph::ProgramGraph from_json(std::string_view text) {
  const Json doc = detail::parse_document(text);
  detail::check_version(doc, "graph");
  graph::ProgramGraph g(detail::get_string(doc, "module_name", "graph"));

  const Json &nodes = detail::field(doc, "nodes", "graph");
  if (!nodes.is_array() || nodes.empty())
    throw SchemaError("graph.nodes", "expected a non-empty array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string where = "graph.nodes[" + std::to_string(i) + "]";
    const Json &n = nodes[i];
    if (detail::get_uint(n, "id", where) != i)
      throw SchemaError(where + ".id", "ids must be dense and in order");
    const auto kind = graph::parse_node_kind(detail::get_string(n, "kind", where));
    if (!kind)
      throw SchemaError(where + ".kind", "unknown node kind");
    graph::NodeAttrs attrs = detail::attrs_from_json(n, where);
    if ((i == 0) != (*kind == graph::NodeKind::External))
      throw SchemaError(where + ".kind", "the external node must be node 0 and unique");
    if (i == 0) {
      if (attrs != g.node(0).attrs)
        throw SchemaError(where, "unexpected external node attributes");
      continue;
    }
    try {
      g.add_node(*kind, std::move(attrs));
    } catch (const InvariantViolation &e) {
      throw SchemaError(where, e.what());
    }
  }

  const Json &edges = detail::field(doc, "edges", "graph");
  if (!edges.is_array())
    throw SchemaError("graph.edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "graph.edges[" + std::to_string(i) + "]";
    const Json &e = edges[i];
    const auto kind = graph::parse_edge_kind(detail::get_string(e, "kind", where));
    if (!kind)
      throw SchemaError(where + ".kind", "unknown edge kind");
    const auto src = detail::get_uint(e, "src", where);
    const auto dst = detail::get_uint(e, "dst", where);
    const auto pos = detail::get_uint(e, "position", where);
    if (src >= g.node_count() || dst >= g.node_count() || pos > UINT32_MAX)
      throw SchemaError(where, "endpoint or position out of range");
    try {
      g.add_edge({static_cast<graph::NodeId>(src), static_cast<graph::NodeId>(dst),
                  *kind, static_cast<std::uint32_t>(pos)});
    } catch (const InvariantViolation &ex) {
      throw SchemaError(where, ex.what());
    }
  }
  return g;
}

} // namespace perfograph::io
