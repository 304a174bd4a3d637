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

#include "perfograph/ir/module.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace perfograph::ir {

enum class ParseMode { Strict, Lenient };

struct ParseWarning {
  std::size_t line = 0;
  std::string message;
};

struct ParseDiagnostics {
  std::vector<ParseWarning> warnings;
  std::size_t skipped_instructions = 0;
  ParseMode mode = ParseMode::Strict;
};

struct ParseResult {
  IrModule module;
  ParseDiagnostics diagnostics;
};

/// The opcodes the parser understands fully. Anything else is an
/// UnsupportedConstruct in strict mode and an opaque instruction in
/// lenient mode.
bool is_supported_opcode(std::string_view opcode);

/// Parses textual LLVM IR.
///
/// Strict mode throws SyntaxError or UnsupportedConstruct on the first
/// problem. Lenient mode turns unknown or malformed instructions into
/// opaque instructions, skips unrecognised top-level lines and records a
/// warning for each. Duplicate definitions throw DuplicateDefinition in both
/// modes.
ParseResult parse_module(std::string_view text, ParseMode mode = ParseMode::Strict,
                         std::string module_name = "module");

/// Parses a standalone type such as "<vscale x 4 x i32>". Throws
/// SyntaxError on malformed input or trailing tokens.
TypeRef parse_type(std::string_view text);

} // namespace perfograph::ir
