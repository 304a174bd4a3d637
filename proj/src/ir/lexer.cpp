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

#include "lexer.hpp"

#include <cctype>

namespace perfograph::ir::detail {

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '$' || c == '-';
}

bool is_word_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$' ||
         c == '.';
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '$';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_hex_digit(char c) {
  return std::isxdigit(static_cast<unsigned char>(c)) != 0;
}

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (skip_space_and_comments(), pos_ < src_.size()) {
      const std::size_t line = line_;
      const TokKind kind = next();
      out.push_back(Token{kind, std::string(text_), line});
    }
    out.push_back(Token{TokKind::End, "", line_});
    return out;
  }

private:
  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n')
          ++pos_;
      } else {
        break;
      }
    }
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  // Consumes a quoted string starting at pos_ (which is on the quote).
  void consume_string() {
    ++pos_;
    while (pos_ < src_.size() && src_[pos_] != '"') {
      if (src_[pos_] == '\n')
        ++line_;
      ++pos_;
    }
    if (pos_ < src_.size())
      ++pos_;
  }

  // Identifier after a sigil: quoted, numeric or named.
  void consume_ident_body() {
    if (peek() == '"') {
      consume_string();
      return;
    }
    while (pos_ < src_.size() && (is_ident_char(src_[pos_]) || src_[pos_] == '\\'))
      ++pos_;
  }

  TokKind sigil(TokKind kind) {
    ++pos_;
    const std::size_t body = pos_;
    consume_ident_body();
    text_ = src_.substr(body, pos_ - body);
    return kind;
  }

  TokKind number() {
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+')
      ++pos_;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      pos_ += 2;
      if (std::string_view("KLMHR").find(peek()) != std::string_view::npos)
        ++pos_;
      while (is_hex_digit(peek()))
        ++pos_;
      text_ = src_.substr(start, pos_ - start);
      return TokKind::Hex;
    }
    while (is_digit(peek()))
      ++pos_;
    bool is_float = false;
    if (peek() == '.' && peek(1) != '.') {
      is_float = true;
      ++pos_;
      while (is_digit(peek()))
        ++pos_;
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (is_digit(peek(1)) ||
         ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
      is_float = true;
      pos_ += 2;
      while (is_digit(peek()))
        ++pos_;
    }
    text_ = src_.substr(start, pos_ - start);
    return is_float ? TokKind::Float : TokKind::Integer;
  }

  TokKind next() {
    const char c = peek();
    const std::size_t start = pos_;
    switch (c) {
    case '%':
      return sigil(TokKind::LocalId);
    case '@':
      return sigil(TokKind::GlobalId);
    case '!':
      if (is_ident_char(peek(1)) || peek(1) == '\\') {
        ++pos_;
        const std::size_t body = pos_;
        while (is_ident_char(peek()) || peek() == '\\')
          ++pos_;
        text_ = src_.substr(body, pos_ - body);
        return TokKind::MetadataId;
      }
      break;
    case '#':
      if (is_digit(peek(1))) {
        ++pos_;
        while (is_digit(peek()))
          ++pos_;
        text_ = src_.substr(start + 1, pos_ - start - 1);
        return TokKind::AttrGroup;
      }
      break;
    case '"':
      consume_string();
      text_ = src_.substr(start, pos_ - start);
      return TokKind::String;
    case '.':
      if (peek(1) == '.' && peek(2) == '.') {
        pos_ += 3;
        text_ = src_.substr(start, 3);
        return TokKind::Ellipsis;
      }
      break;
    default:
      break;
    }
    if (is_digit(c) || ((c == '-' || c == '+') && is_digit(peek(1))))
      return number();
    if (c == 'c' && peek(1) == '"') {
      ++pos_;
      consume_string();
      text_ = src_.substr(start, pos_ - start);
      return TokKind::CString;
    }
    if (is_word_start(c)) {
      while (is_word_char(peek()))
        ++pos_;
      text_ = src_.substr(start, pos_ - start);
      return TokKind::Word;
    }
    ++pos_;
    text_ = src_.substr(start, 1);
    return TokKind::Punct;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::string_view text_;
};

} // namespace

std::vector<Token> lex(std::string_view src) { return Lexer(src).run(); }

} // namespace perfograph::ir::detail
