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

#include <json.hpp>

#include <string>

namespace perfograph::io::detail {

using Json = nlohmann::ordered_json;

Json attrs_to_json(const graph::NodeAttrs &attrs);
/// `where` prefixes field names in SchemaError messages.
graph::NodeAttrs attrs_from_json(const Json &j, const std::string &where);

/// Parses text, mapping parse failures to SchemaError("document").
Json parse_document(std::string_view text);
void check_version(const Json &doc, const std::string &where);

const Json &field(const Json &j, const std::string &key, const std::string &where);
std::string get_string(const Json &j, const std::string &key, const std::string &where);
std::uint64_t get_uint(const Json &j, const std::string &key, const std::string &where);

std::string dump(const Json &j);

} // namespace perfograph::io::detail
