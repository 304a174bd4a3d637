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
#include <stdexcept>
#include <string>

namespace perfograph {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t line, std::string expected, std::string found)
      : Error("line " + std::to_string(line) + ": expected " + expected +
              ", found '" + found + "'"),
        line_(line), expected_(std::move(expected)), found_(std::move(found)) {}

  std::size_t line() const { return line_; }
  const std::string &expected() const { return expected_; }
  const std::string &found() const { return found_; }

private:
  std::size_t line_;
  std::string expected_;
  std::string found_;
};

class UnsupportedConstruct : public Error {
public:
  UnsupportedConstruct(std::size_t line, std::string construct)
      : Error("line " + std::to_string(line) + ": unsupported construct '" +
              construct + "'"),
        line_(line), construct_(std::move(construct)) {}

  std::size_t line() const { return line_; }
  const std::string &construct() const { return construct_; }

private:
  std::size_t line_;
  std::string construct_;
};

/// A local, global, function or block name defined twice.
class DuplicateDefinition : public Error {
public:
  DuplicateDefinition(std::size_t line, std::string name)
      : Error("line " + std::to_string(line) + ": '" + name +
              "' is already defined"),
        name_(std::move(name)) {}

  const std::string &name() const { return name_; }

private:
  std::string name_;
};

class UnresolvedReference : public Error {
public:
  explicit UnresolvedReference(std::string identifier)
      : Error("unresolved reference to '" + identifier + "'"),
        identifier_(std::move(identifier)) {}

  const std::string &identifier() const { return identifier_; }

private:
  std::string identifier_;
};

class InvariantViolation : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

class LiteralTooLong : public Error {
public:
  explicit LiteralTooLong(const std::string &literal)
      : Error("numeric literal longer than 64 symbols: '" + literal + "'") {}
};

class NonNumeric : public Error {
public:
  explicit NonNumeric(const std::string &literal)
      : Error("not a numeric literal: '" + literal + "'") {}
};

class EmptySequence : public Error {
public:
  EmptySequence() : Error("cannot aggregate an empty digit sequence") {}
};

class SchemaError : public Error {
public:
  SchemaError(std::string field, const std::string &message)
      : Error("schema error at '" + field + "': " + message),
        field_(std::move(field)) {}

  const std::string &field() const { return field_; }

private:
  std::string field_;
};

/// A file could not be read or written.
class IoError : public Error {
public:
  using Error::Error;
};

class VocabMiss : public Error {
public:
  explicit VocabMiss(const std::string &token)
      : Error("token not in closed vocabulary: '" + token + "'") {}
};

} // namespace perfograph
