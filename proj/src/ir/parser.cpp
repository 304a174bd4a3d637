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

#include "perfograph/ir/parser.hpp"

#include "lexer.hpp"
#include "perfograph/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>
#include <unordered_set>

namespace perfograph::ir {

using detail::lex;
using detail::Token;
using detail::TokKind;

namespace {

constexpr std::array kBinaryOps = {
    "add", "sub", "mul", "udiv", "sdiv", "fadd", "fsub", "fmul", "fdiv",
    "urem", "srem", "frem", "and", "or", "xor", "shl", "lshr", "ashr"};
constexpr std::array kCastOps = {"zext",   "sext",   "trunc", "fptosi",
                                 "sitofp", "bitcast", "fpext", "fptrunc"};
constexpr std::array kOtherOps = {"alloca", "load",  "store", "getelementptr",
                                  "icmp",   "fcmp",  "br",    "switch",
                                  "ret",    "call",  "phi",   "select",
                                  "unreachable"};
constexpr std::array kValueKeywords = {"null",  "undef", "poison",
                                       "zeroinitializer", "true", "false",
                                       "none"};
constexpr std::array kFastMathFlags = {"fast", "nnan",     "ninf", "nsz",
                                       "arcp", "contract", "afn",  "reassoc"};
constexpr std::array kAtomicOrderings = {"unordered", "monotonic", "acquire",
                                         "release",   "acq_rel",   "seq_cst"};

template <std::size_t N>
bool contains(const std::array<const char *, N> &set, std::string_view s) {
  return std::any_of(set.begin(), set.end(),
                     [&](const char *x) { return s == x; });
}

bool is_binary_op(std::string_view s) { return contains(kBinaryOps, s); }
bool is_cast_op(std::string_view s) { return contains(kCastOps, s); }

} // namespace

bool is_supported_opcode(std::string_view opcode) {
  return is_binary_op(opcode) || is_cast_op(opcode) ||
         contains(kOtherOps, opcode);
}

namespace {

std::string spell(const Token &t) {
  switch (t.kind) {
  case TokKind::LocalId:
    return "%" + t.text;
  case TokKind::GlobalId:
    return "@" + t.text;
  case TokKind::MetadataId:
    return "!" + t.text;
  case TokKind::AttrGroup:
    return "#" + t.text;
  case TokKind::End:
    return "<end of line>";
  default:
    return t.text;
  }
}

bool is_open(const Token &t) {
  return t.is_punct('(') || t.is_punct('[') || t.is_punct('{') ||
         t.is_punct('<');
}
bool is_close(const Token &t) {
  return t.is_punct(')') || t.is_punct(']') || t.is_punct('}') ||
         t.is_punct('>');
}

std::string join_tokens(const std::vector<Token> &toks, std::size_t b,
                        std::size_t e) {
  std::string out;
  for (std::size_t i = b; i < e; ++i) {
    const Token &t = toks[i];
    const bool tight = t.is_punct(',') || t.is_punct(')') || t.is_punct('*') ||
                       (i > b && toks[i - 1].is_punct('('));
    if (!out.empty() && !tight)
      out += ' ';
    out += spell(t);
  }
  return out;
}

bool is_int_type_word(std::string_view w) {
  if (w.size() < 2 || w[0] != 'i')
    return false;
  return std::all_of(w.begin() + 1, w.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

bool is_type_start(const Token &t) {
  if (t.is(TokKind::LocalId))
    return true;
  if (t.is_punct('[') || t.is_punct('<') || t.is_punct('{'))
    return true;
  if (!t.is(TokKind::Word))
    return false;
  static const std::set<std::string, std::less<>> words = {
      "void",     "half",    "bfloat",  "float",  "double",
      "fp128",    "x86_fp80", "ppc_fp128", "x86_mmx", "x86_amx",
      "ptr",      "label",   "metadata", "token"};
  return words.count(t.text) > 0 || is_int_type_word(t.text);
}

/// Cursor over a half-open token range. Reading past the end yields a
/// synthetic End token carrying the line of the last real token.
class Cursor {
public:
  Cursor(const std::vector<Token> &toks, std::size_t begin, std::size_t end)
      : toks_(toks), pos_(begin), end_(end) {
    end_token_.kind = TokKind::End;
    end_token_.line = end > begin ? toks[end - 1].line : toks[begin].line;
  }

  const Token &peek(std::size_t k = 0) const {
    return pos_ + k < end_ ? toks_[pos_ + k] : end_token_;
  }
  const Token &next() {
    const Token &t = peek();
    if (pos_ < end_)
      ++pos_;
    return t;
  }
  bool at_end() const { return pos_ >= end_; }
  std::size_t pos() const { return pos_; }
  void seek(std::size_t p) { pos_ = p; }

  [[noreturn]] void fail(const std::string &expected) const {
    throw SyntaxError(peek().line, expected, spell(peek()));
  }

  bool accept_punct(char c) {
    if (peek().is_punct(c)) {
      next();
      return true;
    }
    return false;
  }
  void expect_punct(char c) {
    if (!accept_punct(c))
      fail(std::string("'") + c + "'");
  }
  bool accept_word(std::string_view w) {
    if (peek().is_word(w)) {
      next();
      return true;
    }
    return false;
  }
  void expect_word(std::string_view w) {
    if (!accept_word(w))
      fail("'" + std::string(w) + "'");
  }
  const Token &expect(TokKind kind, const char *what) {
    if (!peek().is(kind))
      fail(what);
    return next();
  }
  std::uint64_t expect_uint(const char *what) {
    const Token &t = expect(TokKind::Integer, what);
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
      throw SyntaxError(t.line, what, t.text);
    return v;
  }

  /// Skips one bracketed group starting at the current opening token.
  void skip_balanced() {
    int depth = 0;
    do {
      const Token &t = next();
      if (t.is(TokKind::End))
        fail("closing bracket");
      if (is_open(t))
        ++depth;
      else if (is_close(t))
        --depth;
    } while (depth > 0);
  }

  const std::vector<Token> &tokens() const { return toks_; }

private:
  const std::vector<Token> &toks_;
  std::size_t pos_;
  std::size_t end_;
  Token end_token_;
};

TypeRef make_checked(std::size_t line, auto &&factory) {
  try {
    return factory();
  } catch (const InvariantViolation &e) {
    throw SyntaxError(line, "valid type", e.what());
  }
}

TypeRef parse_type_at(Cursor &c, bool allow_function_suffix = true);

TypeRef parse_base_type(Cursor &c) {
  const Token &t = c.peek();
  const std::size_t line = t.line;
  if (t.is(TokKind::Word)) {
    const std::string w = t.text;
    c.next();
    if (w == "void")
      return void_type();
    if (w == "label")
      return label_type();
    if (w == "half")
      return float_type(FloatKind::Half);
    if (w == "float")
      return float_type(FloatKind::Float);
    if (w == "double")
      return float_type(FloatKind::Double);
    if (is_int_type_word(w)) {
      unsigned bits = 0;
      std::from_chars(w.data() + 1, w.data() + w.size(), bits);
      return make_checked(line, [&] { return int_type(bits); });
    }
    if (w == "ptr" && c.peek().is_word("addrspace")) {
      c.next();
      c.expect_punct('(');
      const auto space = c.expect_uint("address space");
      c.expect_punct(')');
      return opaque_type("ptr addrspace(" + std::to_string(space) + ")");
    }
    static const std::set<std::string, std::less<>> opaque_words = {
        "bfloat", "fp128",    "x86_fp80", "ppc_fp128", "x86_mmx",
        "x86_amx", "ptr",     "metadata", "token"};
    if (opaque_words.count(w))
      return opaque_type(w);
    c.seek(c.pos() - 1);
    c.fail("type");
  }
  if (t.is(TokKind::LocalId)) {
    c.next();
    return opaque_type("%" + t.text);
  }
  if (c.accept_punct('[')) {
    const auto n = c.expect_uint("array length");
    c.expect_word("x");
    auto elem = parse_type_at(c);
    c.expect_punct(']');
    return make_checked(line, [&] { return array_of(n, elem); });
  }
  if (c.accept_punct('<')) {
    if (c.peek().is_punct('{')) {
      auto s = parse_base_type(c);
      c.expect_punct('>');
      const auto *st = s->as<StructType>();
      return struct_of(st->fields, true);
    }
    const bool scalable = c.accept_word("vscale");
    if (scalable)
      c.expect_word("x");
    const auto n = c.expect_uint("vector length");
    c.expect_word("x");
    auto elem = parse_type_at(c);
    c.expect_punct('>');
    return make_checked(line, [&] {
      return scalable ? scalable_vector_of(n, elem) : vector_of(n, elem);
    });
  }
  if (c.accept_punct('{')) {
    std::vector<TypeRef> fields;
    if (!c.accept_punct('}')) {
      do {
        fields.push_back(parse_type_at(c));
      } while (c.accept_punct(','));
      c.expect_punct('}');
    }
    return struct_of(std::move(fields), false);
  }
  c.fail("type");
}

TypeRef parse_type_at(Cursor &c, bool allow_function_suffix) {
  TypeRef t = parse_base_type(c);
  for (;;) {
    if (c.accept_punct('*')) {
      t = pointer_to(t);
    } else if (c.peek().is_word("addrspace") && c.peek(1).is_punct('(')) {
      c.next();
      c.next();
      const auto space = c.expect_uint("address space");
      c.expect_punct(')');
      c.expect_punct('*');
      t = opaque_type(type_to_string(t) + " addrspace(" +
                      std::to_string(space) + ")*");
    } else if (allow_function_suffix && c.peek().is_punct('(')) {
      c.next();
      std::string params;
      if (!c.accept_punct(')')) {
        do {
          if (!params.empty())
            params += ", ";
          if (c.peek().is(TokKind::Ellipsis)) {
            c.next();
            params += "...";
          } else {
            params += type_to_string(parse_type_at(c));
          }
        } while (c.accept_punct(','));
        c.expect_punct(')');
      }
      t = opaque_type(type_to_string(t) + " (" + params + ")");
    } else {
      return t;
    }
  }
}

bool starts_constant_expression(std::string_view w) {
  static const std::set<std::string, std::less<>> words = {
      "getelementptr", "inttoptr",      "ptrtoint",      "addrspacecast",
      "uitofp",        "fptoui",        "blockaddress",  "dso_local_equivalent",
      "no_cfi",        "asm",           "extractelement", "insertelement",
      "shufflevector", "extractvalue",  "insertvalue"};
  return words.count(w) > 0 || is_supported_opcode(w);
}

/// Parameter/return attributes between a type and a value, e.g.
/// `noundef nonnull align 8 dereferenceable(16)`.
void skip_value_attributes(Cursor &c) {
  for (;;) {
    const Token &t = c.peek();
    if (t.is(TokKind::Word) && !contains(kValueKeywords, t.text) &&
        !is_type_start(t) && !starts_constant_expression(t.text)) {
      c.next();
      if (t.text == "align" && c.peek().is(TokKind::Integer))
        c.next();
      if (c.peek().is_punct('('))
        c.skip_balanced();
    } else {
      return;
    }
  }
}

void skip_words(Cursor &c, const auto &set) {
  while (c.peek().is(TokKind::Word) && contains(set, c.peek().text))
    c.next();
}

/// Trailing `, align N`, `, !md !N` and attribute-group references.
void parse_trailer(Cursor &c) {
  while (!c.at_end()) {
    if (c.peek().is(TokKind::AttrGroup)) {
      c.next();
      continue;
    }
    if (!c.accept_punct(','))
      c.fail("end of instruction");
    if (c.accept_word("align")) {
      c.expect(TokKind::Integer, "alignment");
    } else if (c.peek().is(TokKind::MetadataId)) {
      c.next();
      if (c.peek().is(TokKind::MetadataId)) {
        c.next();
        if (c.peek().is_punct('('))
          c.skip_balanced();
      } else if (c.accept_punct('!')) {
        c.skip_balanced();
      } else {
        c.fail("metadata");
      }
    } else {
      c.fail("'align' or metadata attachment");
    }
  }
}

class ModuleParser {
public:
  ModuleParser(std::string_view text, ParseMode mode, std::string name)
      : toks_(lex(text)), mode_(mode) {
    module_.name = std::move(name);
    diags_.mode = mode;
    split_lines(text);
    opaque_pointers_ = std::any_of(toks_.begin(), toks_.end(),
                                   [](const Token &t) { return t.is_word("ptr"); });
  }

  ParseResult run() {
    while (!toks_[pos_].is(TokKind::End))
      parse_top_level();
    check_module_names();
    return ParseResult{std::move(module_), std::move(diags_)};
  }

private:
  bool lenient() const { return mode_ == ParseMode::Lenient; }

  void warn(std::size_t line, std::string message) {
    diags_.warnings.push_back({line, std::move(message)});
  }

  void split_lines(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto nl = text.find('\n', start);
      if (nl == std::string_view::npos)
        nl = text.size();
      lines_.emplace_back(text.substr(start, nl - start));
      start = nl + 1;
    }
  }

  /// Source text of lines [first, last], comments and outer blanks removed.
  std::string source_text(std::size_t first, std::size_t last) const {
    std::string out;
    for (std::size_t l = first; l <= last && l - 1 < lines_.size(); ++l) {
      std::string_view s = lines_[l - 1];
      bool quoted = false;
      std::size_t cut = s.size();
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"')
          quoted = !quoted;
        else if (s[i] == ';' && !quoted) {
          cut = i;
          break;
        }
      }
      s = s.substr(0, cut);
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      if (b == std::string_view::npos)
        continue;
      if (!out.empty())
        out += ' ';
      out += s.substr(b, e - b + 1);
    }
    return out;
  }

  /// End of the statement starting at `begin`: the rest of its line plus
  /// any lines needed to close open brackets. Stops before a `}` that
  /// closes an enclosing function body.
  std::size_t statement_end(std::size_t begin) const {
    const std::size_t line = toks_[begin].line;
    int depth = 0;
    std::size_t i = begin;
    for (; !toks_[i].is(TokKind::End); ++i) {
      const Token &t = toks_[i];
      if (depth == 0 && i > begin && t.line != line)
        break;
      if (t.is_punct('(') || t.is_punct('[') || t.is_punct('{')) {
        ++depth;
      } else if (t.is_punct(')') || t.is_punct(']') || t.is_punct('}')) {
        if (depth == 0)
          break;
        --depth;
      }
    }
    return i;
  }

  void skip_statement() { pos_ = std::max(statement_end(pos_), pos_ + 1); }

  void parse_top_level() {
    const Token &t = toks_[pos_];
    if (t.is_word("define")) {
      parse_define();
    } else if (t.is_word("declare")) {
      parse_declare();
    } else if (t.is(TokKind::GlobalId) && toks_[pos_ + 1].is_punct('=')) {
      parse_global();
    } else if (t.is(TokKind::LocalId) && toks_[pos_ + 1].is_punct('=')) {
      parse_named_type();
    } else if (t.is_word("target") || t.is_word("source_filename") ||
               t.is_word("attributes") || t.is_word("module") ||
               t.is_word("uselistorder") || t.is_word("uselistorder_bb") ||
               t.is(TokKind::MetadataId) || t.is_punct('!') ||
               (t.is(TokKind::Word) && t.text.starts_with('$'))) {
      skip_statement();
    } else {
      if (!lenient())
        throw SyntaxError(t.line, "top-level entity", spell(t));
      warn(t.line, "skipped unrecognised top-level line starting with '" +
                       spell(t) + "'");
      skip_statement();
    }
  }

  void parse_named_type() {
    const std::size_t end = statement_end(pos_);
    IrNamedType nt;
    nt.name = "%" + toks_[pos_].text;
    if (!toks_[pos_ + 2].is_word("type")) {
      if (!lenient())
        throw SyntaxError(toks_[pos_ + 2].line, "'type'", spell(toks_[pos_ + 2]));
      warn(toks_[pos_].line, "skipped local definition at module scope");
      pos_ = end;
      return;
    }
    nt.body = join_tokens(toks_, pos_ + 3, end);
    module_.named_types.push_back(std::move(nt));
    pos_ = end;
  }

  void parse_global() {
    const std::size_t begin = pos_;
    const std::size_t end = statement_end(begin);
    const std::size_t line = toks_[begin].line;
    try {
      Cursor c(toks_, begin, end);
      IrGlobal g;
      g.name = c.next().text;
      c.expect_punct('=');
      while (!c.at_end() && !c.peek().is_word("global") &&
             !c.peek().is_word("constant")) {
        if (c.peek().is_word("alias") || c.peek().is_word("ifunc"))
          throw UnsupportedConstruct(line, c.peek().text);
        c.next();
        if (c.peek().is_punct('('))
          c.skip_balanced();
      }
      if (c.at_end())
        c.fail("'global' or 'constant'");
      g.is_constant = c.next().is_word("constant");
      g.type = parse_type_at(c);
      if (!c.at_end() && !c.peek().is_punct(',')) {
        const std::size_t init_begin = c.pos();
        while (!c.at_end() && !c.peek().is_punct(',')) {
          if (is_open(c.peek()))
            c.skip_balanced();
          else
            c.next();
        }
        g.initializer = join_tokens(toks_, init_begin, c.pos());
      }
      module_.globals.push_back(std::move(g));
    } catch (const Error &e) {
      if (!lenient())
        throw;
      warn(line, std::string("skipped global: ") + e.what());
    }
    pos_ = end;
  }

  /// Finds the earliest start in [begin, name) from which a type parses
  /// exactly up to the function name. Linkage and return attributes
  /// precede it.
  TypeRef parse_return_type(std::size_t begin, std::size_t name) {
    for (std::size_t s = begin; s < name; ++s) {
      if (!is_type_start(toks_[s]))
        continue;
      try {
        Cursor c(toks_, s, name);
        auto t = parse_type_at(c, false);
        if (c.at_end())
          return t;
      } catch (const Error &) {
      }
    }
    throw SyntaxError(toks_[name].line, "return type", spell(toks_[name]));
  }

  /// Parses `(params)` at the cursor. Unnamed parameters get implicit
  /// numbers in order.
  std::vector<IrParam> parse_params(Cursor &c, bool &vararg) {
    std::vector<IrParam> params;
    unsigned next_number = 0;
    c.expect_punct('(');
    if (c.accept_punct(')'))
      return params;
    do {
      if (c.peek().is(TokKind::Ellipsis)) {
        c.next();
        vararg = true;
        continue;
      }
      IrParam p;
      p.type = parse_type_at(c);
      skip_value_attributes(c);
      if (c.peek().is(TokKind::LocalId))
        p.name = c.next().text;
      else
        p.name = std::to_string(next_number);
      if (is_number_name(p.name))
        next_number = std::max(next_number, number_of(p.name) + 1);
      params.push_back(std::move(p));
    } while (c.accept_punct(','));
    c.expect_punct(')');
    return params;
  }

  static bool is_number_name(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) {
      return ch >= '0' && ch <= '9';
    });
  }
  static unsigned number_of(std::string_view s) {
    unsigned v = 0;
    std::from_chars(s.data(), s.data() + s.size(), v);
    return v;
  }

  std::size_t find_name(std::size_t from) const {
    for (std::size_t i = from; !toks_[i].is(TokKind::End); ++i) {
      if (toks_[i].is(TokKind::GlobalId))
        return i;
      if (toks_[i].is_punct('{'))
        break;
    }
    throw SyntaxError(toks_[from].line, "function name", spell(toks_[from]));
  }

  void parse_declare() {
    const std::size_t begin = pos_;
    const std::size_t end = statement_end(begin);
    const std::size_t line = toks_[begin].line;
    try {
      const std::size_t name = find_name(begin + 1);
      IrExternalDecl d;
      d.name = toks_[name].text;
      auto ret = parse_return_type(begin + 1, name);
      Cursor c(toks_, name + 1, end);
      bool vararg = false;
      auto params = parse_params(c, vararg);
      std::string sig = type_to_string(ret) + " (";
      for (std::size_t i = 0; i < params.size(); ++i) {
        if (i)
          sig += ", ";
        sig += type_to_string(params[i].type);
      }
      if (vararg)
        sig += params.empty() ? "..." : ", ...";
      d.signature = sig + ")";
      module_.external_decls.push_back(std::move(d));
    } catch (const Error &e) {
      if (!lenient())
        throw;
      warn(line, std::string("skipped declaration: ") + e.what());
    }
    pos_ = end;
  }

  void parse_define() {
    const std::size_t begin = pos_;
    const std::size_t line = toks_[begin].line;
    const std::size_t name = find_name(begin + 1);
    IrFunction fn;
    fn.name = toks_[name].text;
    fn.return_type = parse_return_type(begin + 1, name);

    std::size_t open = name + 1;
    {
      std::size_t limit = open;
      while (!toks_[limit].is(TokKind::End) && !toks_[limit].is_punct('{'))
        ++limit;
      if (toks_[limit].is(TokKind::End))
        throw SyntaxError(toks_[limit].line, "'{'", spell(toks_[limit]));
      // Only the parameter list matters; attributes, section, comdat,
      // personality and !dbg up to the brace are discarded.
      std::size_t close = open;
      int depth = 0;
      for (; close < limit; ++close) {
        if (toks_[close].is_punct('('))
          ++depth;
        else if (toks_[close].is_punct(')') && --depth == 0)
          break;
      }
      Cursor c(toks_, open, close + 1);
      bool vararg = false;
      fn.params = parse_params(c, vararg);
      open = limit;
    }
    pos_ = open + 1;
    parse_body(fn);
    if (fn.blocks.empty()) {
      if (!lenient())
        throw SyntaxError(line, "at least one basic block", "'}'");
      warn(line, "function @" + fn.name + " has no blocks; kept as a declaration");
      module_.external_decls.push_back({fn.name, type_to_string(fn.return_type) + " (...)"});
      return;
    }
    check_function(fn);
    module_.functions.push_back(std::move(fn));
  }

  void parse_body(IrFunction &fn) {
    unsigned next_number = 0;
    for (const auto &p : fn.params)
      if (is_number_name(p.name))
        next_number = std::max(next_number, number_of(p.name) + 1);

    auto note_name = [&](const std::string &n) {
      if (is_number_name(n))
        next_number = std::max(next_number, number_of(n) + 1);
    };

    for (;;) {
      const Token &t = toks_[pos_];
      if (t.is(TokKind::End))
        throw SyntaxError(t.line, "'}'", "end of file");
      if (t.is_punct('}')) {
        ++pos_;
        return;
      }
      const bool label_like = t.is(TokKind::Word) || t.is(TokKind::Integer) ||
                              t.is(TokKind::String);
      if (label_like && toks_[pos_ + 1].is_punct(':')) {
        fn.blocks.push_back(IrBlock{t.text, {}});
        note_name(t.text);
        pos_ += 2;
        continue;
      }
      const bool need_block =
          fn.blocks.empty() || (!fn.blocks.back().instructions.empty() &&
                                fn.blocks.back().instructions.back().is_terminator());
      if (need_block) {
        fn.blocks.push_back(IrBlock{std::to_string(next_number), {}});
        ++next_number;
      }
      const std::size_t end = std::max(statement_end(pos_), pos_ + 1);
      IrInstruction inst = parse_instruction_or_opaque(pos_, end);
      if (inst.result)
        note_name(*inst.result);
      fn.blocks.back().instructions.push_back(std::move(inst));
      pos_ = end;
    }
  }

  IrInstruction parse_instruction_or_opaque(std::size_t begin, std::size_t end) {
    try {
      return parse_instruction(begin, end);
    } catch (const DuplicateDefinition &) {
      throw;
    } catch (const Error &e) {
      if (!lenient())
        throw;
      warn(toks_[begin].line, e.what());
      return make_opaque(begin, end);
    }
  }

  IrInstruction make_opaque(std::size_t begin, std::size_t end) {
    IrInstruction inst;
    inst.is_opaque = true;
    inst.line = toks_[begin].line;
    inst.text = source_text(toks_[begin].line, toks_[end - 1].line);
    std::size_t i = begin;
    if (toks_[i].is(TokKind::LocalId) && i + 1 < end && toks_[i + 1].is_punct('=')) {
      inst.result = toks_[i].text;
      i += 2;
    }
    while (i < end && toks_[i].is(TokKind::Word) &&
           (toks_[i].text == "tail" || toks_[i].text == "musttail" ||
            toks_[i].text == "notail"))
      ++i;
    inst.opcode = i < end ? spell(toks_[i]) : "<empty>";
    for (std::size_t j = i + 1; j < end; ++j) {
      const Token &t = toks_[j];
      const bool is_label = j > 0 && toks_[j - 1].is_word("label");
      if (t.is(TokKind::LocalId) && !is_label) {
        inst.operands.push_back({OperandKind::LocalRef, t.text, nullptr});
      } else if (t.is(TokKind::GlobalId)) {
        inst.operands.push_back({OperandKind::GlobalRef, t.text, nullptr});
      }
    }
    ++diags_.skipped_instructions;
    return inst;
  }

  IrOperand parse_value(Cursor &c, const TypeRef &type) {
    const Token &t = c.peek();
    IrOperand op;
    op.type = type;
    switch (t.kind) {
    case TokKind::LocalId:
      op.kind = OperandKind::LocalRef;
      op.text = c.next().text;
      return op;
    case TokKind::GlobalId:
      op.kind = OperandKind::GlobalRef;
      op.text = c.next().text;
      return op;
    case TokKind::Integer:
    case TokKind::Float:
    case TokKind::Hex:
      op.kind = OperandKind::NumericLiteral;
      op.is_hex = t.is(TokKind::Hex);
      op.text = c.next().text;
      return op;
    case TokKind::String:
    case TokKind::CString:
      op.kind = OperandKind::ConstantExpr;
      op.text = c.next().text;
      return op;
    default:
      break;
    }
    if (t.is(TokKind::Word) && contains(kValueKeywords, t.text)) {
      op.kind = OperandKind::UndefOrNull;
      op.text = c.next().text;
      return op;
    }
    if (t.is_punct('[') || t.is_punct('<') || t.is_punct('{')) {
      const std::size_t b = c.pos();
      c.skip_balanced();
      op.kind = OperandKind::ConstantExpr;
      op.text = join_tokens(c.tokens(), b, c.pos());
      return op;
    }
    if (t.is(TokKind::Word) && (c.peek(1).is_punct('(') || t.text == "asm" ||
                                c.peek(1).is(TokKind::Word))) {
      // Constant expression (getelementptr (...), bitcast (...), ...).
      if (!lenient())
        throw UnsupportedConstruct(t.line, "constant expression '" + t.text + "'");
      const std::size_t b = c.pos();
      while (c.peek().is(TokKind::Word) || c.peek().is(TokKind::String))
        c.next();
      if (c.peek().is_punct('('))
        c.skip_balanced();
      op.kind = OperandKind::ConstantExpr;
      op.is_opaque = true;
      op.text = join_tokens(c.tokens(), b, c.pos());
      warn(t.line, "constant expression kept as opaque operand: " + op.text);
      return op;
    }
    c.fail("value");
  }

  IrOperand parse_typed_value(Cursor &c) {
    auto type = parse_type_at(c);
    skip_value_attributes(c);
    return parse_value(c, type);
  }

  std::string expect_label(Cursor &c) {
    c.expect_word("label");
    return c.expect(TokKind::LocalId, "block label").text;
  }

  TypeRef pointer_result(const TypeRef &pointee) const {
    return opaque_pointers_ ? opaque_type("ptr") : pointer_to(pointee);
  }

  static TypeRef gep_result(const TypeRef &source, const TypeRef &base_ptr,
                            const std::vector<IrOperand> &operands) {
    if (!base_ptr->is<PointerType>())
      return opaque_type(base_ptr->is<OpaqueType>() ? type_to_string(base_ptr)
                                                    : "ptr");
    TypeRef cur = source;
    for (std::size_t i = 2; i < operands.size(); ++i) {
      if (const auto *a = cur->as<ArrayType>()) {
        cur = a->element;
      } else if (const auto *v = cur->as<VectorType>()) {
        cur = v->element;
      } else if (const auto *s = cur->as<StructType>()) {
        std::size_t field = 0;
        const auto &idx = operands[i];
        if (idx.kind != OperandKind::NumericLiteral ||
            std::from_chars(idx.text.data(), idx.text.data() + idx.text.size(),
                            field)
                    .ec != std::errc() ||
            field >= s->fields.size())
          return opaque_type("ptr");
        cur = s->fields[field];
      } else {
        return opaque_type("ptr");
      }
    }
    return pointer_to(cur);
  }

  IrInstruction parse_instruction(std::size_t begin, std::size_t end) {
    Cursor c(toks_, begin, end);
    IrInstruction inst;
    inst.line = toks_[begin].line;
    inst.text = source_text(toks_[begin].line, toks_[end - 1].line);
    if (c.peek().is(TokKind::LocalId) && c.peek(1).is_punct('=')) {
      inst.result = c.next().text;
      c.next();
    }
    while (c.accept_word("tail") || c.accept_word("musttail") ||
           c.accept_word("notail")) {
    }
    if (!c.peek().is(TokKind::Word))
      c.fail("instruction opcode");
    inst.opcode = c.next().text;
    const std::string &op = inst.opcode;
    if (!is_supported_opcode(op))
      throw UnsupportedConstruct(inst.line, "instruction '" + op + "'");

    if (op == "alloca") {
      c.accept_word("inalloca");
      c.accept_word("swifterror");
      inst.element_type = parse_type_at(c);
      if (c.peek().is_punct(',') && is_type_start(c.peek(1))) {
        c.next();
        inst.operands.push_back(parse_typed_value(c));
      }
      while (c.peek().is_punct(',') && c.peek(1).is_word("addrspace")) {
        c.next();
        c.next();
        c.skip_balanced();
      }
      inst.result_type = pointer_result(inst.element_type);
    } else if (op == "load") {
      const bool atomic = c.accept_word("atomic");
      c.accept_word("volatile");
      inst.result_type = parse_type_at(c);
      c.expect_punct(',');
      inst.operands.push_back(parse_typed_value(c));
      if (atomic) {
        if (c.accept_word("syncscope"))
          c.skip_balanced();
        skip_words(c, kAtomicOrderings);
      }
    } else if (op == "store") {
      const bool atomic = c.accept_word("atomic");
      c.accept_word("volatile");
      inst.operands.push_back(parse_typed_value(c));
      c.expect_punct(',');
      inst.operands.push_back(parse_typed_value(c));
      if (atomic) {
        if (c.accept_word("syncscope"))
          c.skip_balanced();
        skip_words(c, kAtomicOrderings);
      }
    } else if (op == "getelementptr") {
      while (c.accept_word("inbounds") || c.accept_word("nuw") ||
             c.accept_word("nusw")) {
      }
      inst.element_type = parse_type_at(c);
      c.expect_punct(',');
      inst.operands.push_back(parse_typed_value(c));
      while (c.peek().is_punct(',') && !c.peek(1).is(TokKind::MetadataId)) {
        c.next();
        if (c.accept_word("inrange") && c.peek().is_punct('('))
          c.skip_balanced();
        inst.operands.push_back(parse_typed_value(c));
      }
      inst.result_type =
          gep_result(inst.element_type, inst.operands.front().type, inst.operands);
    } else if (is_binary_op(op)) {
      while (c.accept_word("nuw") || c.accept_word("nsw") ||
             c.accept_word("exact") || c.accept_word("disjoint")) {
      }
      skip_words(c, kFastMathFlags);
      auto type = parse_type_at(c);
      inst.operands.push_back(parse_value(c, type));
      c.expect_punct(',');
      inst.operands.push_back(parse_value(c, type));
      inst.result_type = type;
    } else if (op == "icmp" || op == "fcmp") {
      c.accept_word("samesign");
      skip_words(c, kFastMathFlags);
      c.expect(TokKind::Word, "comparison predicate");
      auto type = parse_type_at(c);
      inst.operands.push_back(parse_value(c, type));
      c.expect_punct(',');
      inst.operands.push_back(parse_value(c, type));
      if (const auto *v = type->as<VectorType>())
        inst.result_type = v->length.scalable
                               ? scalable_vector_of(v->length.count, int_type(1))
                               : vector_of(v->length.count, int_type(1));
      else
        inst.result_type = int_type(1);
    } else if (op == "br") {
      if (c.peek().is_word("label")) {
        inst.successors.push_back(expect_label(c));
      } else {
        inst.operands.push_back(parse_typed_value(c));
        c.expect_punct(',');
        inst.successors.push_back(expect_label(c));
        c.expect_punct(',');
        inst.successors.push_back(expect_label(c));
      }
    } else if (op == "switch") {
      inst.operands.push_back(parse_typed_value(c));
      c.expect_punct(',');
      inst.successors.push_back(expect_label(c));
      c.expect_punct('[');
      while (!c.accept_punct(']')) {
        inst.operands.push_back(parse_typed_value(c));
        c.expect_punct(',');
        inst.successors.push_back(expect_label(c));
      }
    } else if (op == "ret") {
      if (!c.accept_word("void"))
        inst.operands.push_back(parse_typed_value(c));
    } else if (op == "unreachable") {
    } else if (op == "phi") {
      skip_words(c, kFastMathFlags);
      auto type = parse_type_at(c);
      do {
        c.expect_punct('[');
        inst.operands.push_back(parse_value(c, type));
        c.expect_punct(',');
        inst.incoming_blocks.push_back(
            c.expect(TokKind::LocalId, "incoming block").text);
        c.expect_punct(']');
      } while (c.peek().is_punct(',') && c.peek(1).is_punct('[') && (c.next(), true));
      inst.result_type = type;
    } else if (op == "select") {
      skip_words(c, kFastMathFlags);
      inst.operands.push_back(parse_typed_value(c));
      c.expect_punct(',');
      inst.operands.push_back(parse_typed_value(c));
      c.expect_punct(',');
      inst.operands.push_back(parse_typed_value(c));
      inst.result_type = inst.operands[1].type;
    } else if (is_cast_op(op)) {
      inst.operands.push_back(parse_typed_value(c));
      c.expect_word("to");
      inst.result_type = parse_type_at(c);
    } else if (op == "call") {
      parse_call(c, inst);
    }
    parse_trailer(c);

    if (inst.result && (!inst.result_type || inst.result_type->is_void()))
      throw SyntaxError(inst.line, "instruction producing a value",
                        "'" + op + "' without a result");
    if (!inst.result && inst.result_type && !inst.result_type->is_void() &&
        op != "call")
      throw SyntaxError(inst.line, "result name for '" + op + "'", "none");
    if (inst.result_type && inst.result_type->is_void())
      inst.result_type = nullptr;
    return inst;
  }

  void parse_call(Cursor &c, IrInstruction &inst) {
    skip_words(c, kFastMathFlags);
    // Calling convention and return attributes.
    while (c.peek().is(TokKind::Word) && !is_type_start(c.peek())) {
      const std::string w = c.next().text;
      if ((w == "align" || w == "cc") && c.peek().is(TokKind::Integer))
        c.next();
      if (c.peek().is_punct('('))
        c.skip_balanced();
    }
    auto ret = parse_type_at(c, false);
    if (c.peek().is_punct('('))
      c.skip_balanced(); // explicit function type, e.g. (i8*, ...)
    std::optional<IrOperand> indirect;
    if (c.peek().is(TokKind::GlobalId)) {
      inst.callee = c.next().text;
    } else {
      indirect = parse_value(c, pointer_to(opaque_type(type_to_string(ret) + " (...)")));
    }
    c.expect_punct('(');
    if (!c.accept_punct(')')) {
      do {
        if (c.accept_word("metadata")) {
          int depth = 0;
          while (!c.at_end()) {
            const Token &t = c.peek();
            if (depth == 0 && (t.is_punct(',') || t.is_punct(')')))
              break;
            if (is_open(t))
              ++depth;
            else if (is_close(t))
              --depth;
            c.next();
          }
          continue;
        }
        inst.operands.push_back(parse_typed_value(c));
      } while (c.accept_punct(','));
      c.expect_punct(')');
    }
    if (indirect)
      inst.operands.push_back(std::move(*indirect));
    // Function attributes and operand bundles.
    while (!c.at_end() && !c.peek().is_punct(',')) {
      if (c.peek().is(TokKind::AttrGroup) || c.peek().is(TokKind::Word)) {
        c.next();
        if (c.peek().is_punct('('))
          c.skip_balanced();
      } else if (c.peek().is_punct('[')) {
        c.skip_balanced();
      } else {
        c.fail("call attributes");
      }
    }
    inst.result_type = ret;
  }

  void check_function(IrFunction &fn) {
    std::unordered_set<std::string> locals;
    auto define = [&](const std::string &name, std::size_t line) {
      if (!locals.insert(name).second)
        throw DuplicateDefinition(line, "%" + name);
    };
    for (const auto &p : fn.params)
      define(p.name, 0);
    for (const auto &b : fn.blocks) {
      if (!b.label.empty())
        define(b.label, b.instructions.empty() ? 0 : b.instructions.front().line);
      for (const auto &inst : b.instructions)
        if (inst.result)
          define(*inst.result, inst.line);
    }
    for (auto &b : fn.blocks) {
      if (b.instructions.empty() || !b.instructions.back().is_terminator()) {
        const std::size_t line =
            b.instructions.empty() ? 0 : b.instructions.back().line;
        if (!lenient())
          throw SyntaxError(line, "terminator at end of block %" + b.label,
                            b.instructions.empty() ? "empty block"
                                                   : b.instructions.back().opcode);
        warn(line, "block %" + b.label + " does not end in a terminator");
      }
      for (auto &inst : b.instructions) {
        std::vector<std::string> kept;
        for (auto &s : inst.successors) {
          if (fn.find_block(s)) {
            kept.push_back(s);
            continue;
          }
          if (!lenient())
            throw SyntaxError(inst.line, "defined block label", "%" + s);
          warn(inst.line, "branch to undefined block %" + s + " dropped");
        }
        inst.successors = std::move(kept);
      }
    }
  }

  void check_module_names() {
    std::unordered_set<std::string> fns;
    for (const auto &f : module_.functions)
      if (!fns.insert(f.name).second)
        throw DuplicateDefinition(0, "@" + f.name);
    std::unordered_set<std::string> globals;
    for (const auto &g : module_.globals)
      if (!globals.insert(g.name).second || fns.count(g.name))
        throw DuplicateDefinition(0, "@" + g.name);
  }

  std::vector<Token> toks_;
  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
  ParseMode mode_;
  bool opaque_pointers_ = false;
  IrModule module_;
  ParseDiagnostics diags_;
};

} // namespace

ParseResult parse_module(std::string_view text, ParseMode mode,
                         std::string module_name) {
  return ModuleParser(text, mode, std::move(module_name)).run();
}

TypeRef parse_type(std::string_view text) {
  const auto toks = lex(text);
  Cursor c(toks, 0, toks.size() - 1);
  auto t = parse_type_at(c);
  if (!c.at_end())
    c.fail("end of type");
  return t;
}

} // namespace perfograph::ir
