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

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace perfograph::ir {

class IrType;

/// Types are immutable and shared between every place that mentions them.
using TypeRef = std::shared_ptr<const IrType>;

enum class FloatKind { Half, Float, Double };

/// Length of an array or vector dimension. Scalable vectors carry a
/// multiplier of the runtime `vscale` instead of a fixed count.
struct DimLength {
  std::uint64_t count = 0;
  bool scalable = false;

  /// "4" or "vscale x 4".
  std::string to_string() const;

  friend auto operator<=>(const DimLength &, const DimLength &) = default;
};

struct IntType {
  unsigned bits;
};
struct FloatType {
  FloatKind kind;
};
struct PointerType {
  TypeRef pointee;
};
struct ArrayType {
  std::uint64_t length;
  TypeRef element;
};
struct VectorType {
  DimLength length;
  TypeRef element;
};
struct StructType {
  std::vector<TypeRef> fields;
  bool packed = false;
};
struct VoidType {};
struct LabelType {};
/// Anything outside the modelled subset (named structs, `ptr`, x86_fp80,
/// function types, ...). `name` is the canonical source spelling.
struct OpaqueType {
  std::string name;
};

class IrType {
public:
  using Variant = std::variant<IntType, FloatType, PointerType, ArrayType,
                               VectorType, StructType, VoidType, LabelType,
                               OpaqueType>;

  explicit IrType(Variant v) : v_(std::move(v)) {}

  const Variant &variant() const { return v_; }

  template <class T> const T *as() const { return std::get_if<T>(&v_); }
  template <class T> bool is() const { return std::holds_alternative<T>(v_); }

  bool is_void() const { return is<VoidType>(); }
  /// Array or vector: the constructors that contribute a dimension.
  bool is_dimensioned() const { return is<ArrayType>() || is<VectorType>(); }

  /// Structural (deep) equality.
  friend bool operator==(const IrType &a, const IrType &b);

private:
  Variant v_;
};

bool types_equal(const TypeRef &a, const TypeRef &b);

// Factories. Array and vector factories throw InvariantViolation for
// void/label elements; int_type throws for zero width.
TypeRef int_type(unsigned bits);
TypeRef float_type(FloatKind kind);
TypeRef pointer_to(TypeRef pointee);
TypeRef array_of(std::uint64_t length, TypeRef element);
TypeRef vector_of(std::uint64_t length, TypeRef element);
TypeRef scalable_vector_of(std::uint64_t multiplier, TypeRef element);
TypeRef struct_of(std::vector<TypeRef> fields, bool packed = false);
TypeRef void_type();
TypeRef label_type();
TypeRef opaque_type(std::string name);

/// Canonical LLVM textual rendering, e.g. "[2 x [3 x [4 x float]]]*".
std::string type_to_string(const IrType &t);
inline std::string type_to_string(const TypeRef &t) {
  return type_to_string(*t);
}

struct TypeDim {
  DimLength length;
  /// The sub-type rooted at this dimension.
  TypeRef context;
};

struct PeeledType {
  std::vector<TypeDim> dims; ///< outermost first
  TypeRef base;
};

/// Decomposes nested array/vector types into one entry per dimension.
///
/// A single outermost pointer is looked through, so "[3 x [2 x i32]]*"
/// yields two dims. Pointers below that level end the walk and become the
/// base. Structs are never expanded.
PeeledType peel_aggregate_dims(const TypeRef &t);

} // namespace perfograph::ir
