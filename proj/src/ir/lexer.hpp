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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace perfograph::ir::detail {

enum class TokKind {
  LocalId,    // %x      (text without sigil)
  GlobalId,   // @x
  MetadataId, // !x, !0
  AttrGroup,  // #0
  Word,       // keywords, type names, bare label names
  Integer,    // -12
  Float,      // 1.000000e+00
  Hex,        // 0x400921FB54442D18, 0xK..., 0xH...
  String,     // "..." (quotes kept)
  CString,    // c"..." (prefix and quotes kept)
  Punct,      // single character
  Ellipsis,   // ...
  End,
};

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  std::size_t line = 0;

  bool is(TokKind k) const { return kind == k; }
  bool is_punct(char c) const {
    return kind == TokKind::Punct && text.size() == 1 && text[0] == c;
  }
  bool is_word(std::string_view w) const {
    return kind == TokKind::Word && text == w;
  }
  bool is_number() const {
    return kind == TokKind::Integer || kind == TokKind::Float ||
           kind == TokKind::Hex;
  }
};

/// Splits IR text into tokens; comments are dropped. Never fails: stray
/// characters come back as single-character Punct tokens for the parser
/// to reject. The last token is always End.
std::vector<Token> lex(std::string_view src);

} // namespace perfograph::ir::detail
