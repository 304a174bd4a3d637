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
#include <string_view>

namespace perfograph::io {

inline constexpr int kFormatVersion = 1;

/// Graph document with "format_version", "module_name", "nodes" and
/// "edges". Two-space indented, fixed key order, trailing newline.
std::string to_json(const graph::ProgramGraph &graph);

/// Inverse of to_json. Throws SchemaError naming the offending field for
/// malformed, truncated or unknown-version documents.
graph::ProgramGraph from_json(std::string_view text);

} // namespace perfograph::io
