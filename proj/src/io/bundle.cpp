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

#include "perfograph/io/bundle.hpp"

#include "json_detail.hpp"
#include "perfograph/errors.hpp"
#include "perfograph/io/files.hpp"
#include "perfograph/io/json.hpp"

namespace perfograph::io {

using detail::Json;
using graph::NodeId;
using graph::NodeKind;

namespace {

std::size_t kind_index(NodeKind k) { return static_cast<std::size_t>(k); }

Json config_to_json(const BundleConfig &c) {
  Json j = Json::object();
  j["unify_identifiers"] = c.transform.unify_identifiers;
  j["store_modify_edges"] = c.transform.store_modify_edges;
  j["numeric_values"] = c.transform.numeric_values;
  j["aggregate_chains"] = c.transform.aggregate_chains;
  j["seed"] = c.seed;
  j["k"] = c.k;
  j["out_dim"] = c.out_dim;
  j["aggregation"] = embedding::to_string(c.aggregation);
  return j;
}

bool get_bool(const Json &j, const std::string &key, const std::string &where) {
  const Json &v = detail::field(j, key, where);
  if (!v.is_boolean())
    throw SchemaError(where + "." + key, "expected a boolean");
  return v.get<bool>();
}

BundleConfig config_from_json(const Json &j) {
  const std::string w = "manifest.config";
  BundleConfig c;
  c.transform.unify_identifiers = get_bool(j, "unify_identifiers", w);
  c.transform.store_modify_edges = get_bool(j, "store_modify_edges", w);
  c.transform.numeric_values = get_bool(j, "numeric_values", w);
  c.transform.aggregate_chains = get_bool(j, "aggregate_chains", w);
  c.seed = detail::get_uint(j, "seed", w);
  c.k = detail::get_uint(j, "k", w);
  c.out_dim = detail::get_uint(j, "out_dim", w);
  try {
    c.aggregation = embedding::parse_aggregation(detail::get_string(j, "aggregation", w));
  } catch (const ConfigError &e) {
    throw SchemaError(w + ".aggregation", e.what());
  }
  return c;
}

std::string nodes_file(NodeKind k) { return std::string(graph::to_string(k)) + ".nodes.json"; }

std::int64_t get_int(const Json &j, const std::string &key, const std::string &where) {
  const Json &v = detail::field(j, key, where);
  if (!v.is_number_integer())
    throw SchemaError(where + "." + key, "expected an integer");
  return v.get<std::int64_t>();
}

} // namespace

std::string Relation::name() const {
  return std::string(graph::to_string(src)) + "__" +
         std::string(graph::to_string(kind)) + "__" +
         std::string(graph::to_string(dst));
}

std::size_t HeteroBundle::node_count() const {
  std::size_t n = 0;
  for (const auto &t : node_tables)
    n += t.size();
  return n;
}

HeteroBundle to_hetero_bundle(const graph::ProgramGraph &graph, const Vocab &vocab,
                              BundleMeta meta) {
  HeteroBundle b;
  if (meta.module_name.empty())
    meta.module_name = graph.module_name();
  b.meta = std::move(meta);
  std::vector<std::uint32_t> local(graph.node_count());
  for (std::size_t id = 0; id < graph.node_count(); ++id) {
    const auto &n = graph.node(static_cast<NodeId>(id));
    auto &table = b.node_tables[kind_index(n.kind)];
    local[id] = static_cast<std::uint32_t>(table.size());
    BundleNode rec;
    rec.token_id = vocab.id(n.attrs.text_token);
    if (n.attrs.type_string)
      rec.type_id = vocab.id(*n.attrs.type_string);
    rec.attrs = n.attrs;
    table.push_back(std::move(rec));
  }
  for (const auto &e : graph.edges()) {
    const Relation r{graph.node(e.src).kind, e.kind, graph.node(e.dst).kind};
    b.edge_tables[r].push_back({local[e.src], local[e.dst], e.position});
  }
  return b;
}

graph::ProgramGraph from_hetero_bundle(const HeteroBundle &bundle) {
  graph::ProgramGraph g(bundle.meta.module_name);
  if (bundle.nodes(NodeKind::External).size() != 1)
    throw SchemaError("external", "expected exactly one external node");
  std::array<std::vector<NodeId>, graph::kNodeKindCount> ids;
  ids[kind_index(NodeKind::External)].push_back(graph::ProgramGraph::external_node());
  for (NodeKind k : graph::kAllNodeKinds) {
    if (k == NodeKind::External)
      continue;
    for (const auto &rec : bundle.nodes(k)) {
      try {
        ids[kind_index(k)].push_back(g.add_node(k, rec.attrs));
      } catch (const InvariantViolation &e) {
        throw SchemaError(std::string(graph::to_string(k)), e.what());
      }
    }
  }
  for (const auto &[rel, edges] : bundle.edge_tables) {
    const auto &srcs = ids[kind_index(rel.src)];
    const auto &dsts = ids[kind_index(rel.dst)];
    for (const auto &e : edges) {
      if (e.src >= srcs.size() || e.dst >= dsts.size())
        throw SchemaError(rel.name(), "edge index out of range");
      try {
        g.add_edge({srcs[e.src], dsts[e.dst], rel.kind, e.position});
      } catch (const InvariantViolation &ex) {
        throw SchemaError(rel.name(), ex.what());
      }
    }
  }
  return g;
}

void write_bundle(const HeteroBundle &bundle, const std::filesystem::path &dir) {
  Json manifest = Json::object();
  manifest["format_version"] = kFormatVersion;
  manifest["module_name"] = bundle.meta.module_name;
  manifest["source_path"] = bundle.meta.source_path;
  manifest["config"] = config_to_json(bundle.meta.config);
  manifest["vocab_ref"] = bundle.meta.vocab_ref;

  Json counts = Json::object();
  for (NodeKind k : graph::kAllNodeKinds) {
    const auto &table = bundle.nodes(k);
    counts[std::string(graph::to_string(k))] = table.size();
    Json doc = Json::object();
    doc["format_version"] = kFormatVersion;
    doc["kind"] = graph::to_string(k);
    Json nodes = Json::array();
    for (const auto &rec : table) {
      Json j = Json::object();
      j["token_id"] = rec.token_id;
      j["type_id"] = rec.type_id ? Json(*rec.type_id) : Json(nullptr);
      const Json attrs = detail::attrs_to_json(rec.attrs);
      for (auto it = attrs.begin(); it != attrs.end(); ++it)
        j[it.key()] = it.value();
      nodes.push_back(std::move(j));
    }
    doc["nodes"] = std::move(nodes);
    write_file(dir / nodes_file(k), detail::dump(doc));
  }
  manifest["node_counts"] = std::move(counts);

  Json tables = Json::array();
  for (const auto &[rel, edges] : bundle.edge_tables) {
    const std::string file = rel.name() + ".edges.json";
    Json doc = Json::object();
    doc["format_version"] = kFormatVersion;
    doc["src"] = graph::to_string(rel.src);
    doc["edge"] = graph::to_string(rel.kind);
    doc["dst"] = graph::to_string(rel.dst);
    Json list = Json::array();
    for (const auto &e : edges)
      list.push_back(Json::array({e.src, e.dst, e.position}));
    doc["edges"] = std::move(list);
    write_file(dir / file, detail::dump(doc));
    tables.push_back({{"src", graph::to_string(rel.src)},
                      {"edge", graph::to_string(rel.kind)},
                      {"dst", graph::to_string(rel.dst)},
                      {"file", file},
                      {"count", edges.size()}});
  }
  manifest["edge_tables"] = std::move(tables);
  write_file(dir / "manifest.json", detail::dump(manifest));
}

HeteroBundle read_bundle(const std::filesystem::path &dir) {
  const Json manifest = detail::parse_document(read_file(dir / "manifest.json"));
  detail::check_version(manifest, "manifest");
  HeteroBundle b;
  b.meta.module_name = detail::get_string(manifest, "module_name", "manifest");
  b.meta.source_path = detail::get_string(manifest, "source_path", "manifest");
  b.meta.config = config_from_json(detail::field(manifest, "config", "manifest"));
  b.meta.vocab_ref = detail::get_string(manifest, "vocab_ref", "manifest");

  const Json &counts = detail::field(manifest, "node_counts", "manifest");
  for (NodeKind k : graph::kAllNodeKinds) {
    const std::string name(graph::to_string(k));
    const std::string where = name + ".nodes";
    const Json doc = detail::parse_document(read_file(dir / nodes_file(k)));
    detail::check_version(doc, where);
    if (detail::get_string(doc, "kind", where) != name)
      throw SchemaError(where + ".kind", "does not match file name");
    const Json &nodes = detail::field(doc, "nodes", where);
    if (!nodes.is_array())
      throw SchemaError(where + ".nodes", "expected an array");
    if (detail::get_uint(counts, name, "manifest.node_counts") != nodes.size())
      throw SchemaError("manifest.node_counts." + name, "does not match node table");
    auto &table = b.node_tables[kind_index(k)];
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const std::string w = where + "[" + std::to_string(i) + "]";
      BundleNode rec;
      rec.token_id = get_int(nodes[i], "token_id", w);
      const Json &type_id = detail::field(nodes[i], "type_id", w);
      if (!type_id.is_null())
        rec.type_id = get_int(nodes[i], "type_id", w);
      rec.attrs = detail::attrs_from_json(nodes[i], w);
      table.push_back(std::move(rec));
    }
  }

  const Json &tables = detail::field(manifest, "edge_tables", "manifest");
  if (!tables.is_array())
    throw SchemaError("manifest.edge_tables", "expected an array");
  for (const Json &t : tables) {
    const std::string w = "manifest.edge_tables";
    const auto src = graph::parse_node_kind(detail::get_string(t, "src", w));
    const auto kind = graph::parse_edge_kind(detail::get_string(t, "edge", w));
    const auto dst = graph::parse_node_kind(detail::get_string(t, "dst", w));
    if (!src || !kind || !dst)
      throw SchemaError(w, "unknown kind name");
    const Relation rel{*src, *kind, *dst};
    const std::string file = detail::get_string(t, "file", w);
    const Json doc = detail::parse_document(read_file(dir / file));
    detail::check_version(doc, rel.name());
    const Json &list = detail::field(doc, "edges", rel.name());
    if (!list.is_array() || list.empty() || list.size() != detail::get_uint(t, "count", w))
      throw SchemaError(rel.name() + ".edges", "missing, empty or miscounted");
    auto &edges = b.edge_tables[rel];
    for (const Json &e : list) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() ||
          !e[1].is_number_unsigned() || !e[2].is_number_unsigned())
        throw SchemaError(rel.name() + ".edges", "expected [src, dst, position]");
      edges.push_back({e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>(),
                       e[2].get<std::uint32_t>()});
    }
  }
  return b;
}

} // namespace perfograph::io
