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

#include "perfograph/ir/types.hpp"

#include "perfograph/errors.hpp"

namespace perfograph::ir {

std::string DimLength::to_string() const {
  if (scalable)
    return "vscale x " + std::to_string(count);
  return std::to_string(count);
}

namespace {

template <class... Ts> struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;

void check_element(const TypeRef &element) {
  if (!element)
    throw InvariantViolation("aggregate element type is null");
  if (element->is<VoidType>() || element->is<LabelType>())
    throw InvariantViolation("aggregate element type cannot be " +
                             type_to_string(*element));
}

void render(const IrType &t, std::string &out) {
  std::visit(
      Overloaded{
          [&](const IntType &i) { out += "i" + std::to_string(i.bits); },
          [&](const FloatType &f) {
            switch (f.kind) {
            case FloatKind::Half:
              out += "half";
              break;
            case FloatKind::Float:
              out += "float";
              break;
            case FloatKind::Double:
              out += "double";
              break;
            }
          },
          [&](const PointerType &p) {
            render(*p.pointee, out);
            out += '*';
          },
          [&](const ArrayType &a) {
            out += '[' + std::to_string(a.length) + " x ";
            render(*a.element, out);
            out += ']';
          },
          [&](const VectorType &v) {
            out += '<' + v.length.to_string() + " x ";
            render(*v.element, out);
            out += '>';
          },
          [&](const StructType &s) {
            if (s.packed)
              out += '<';
            if (s.fields.empty()) {
              out += "{}";
            } else {
              out += "{ ";
              for (std::size_t i = 0; i < s.fields.size(); ++i) {
                if (i)
                  out += ", ";
                render(*s.fields[i], out);
              }
              out += " }";
            }
            if (s.packed)
              out += '>';
          },
          [&](const VoidType &) { out += "void"; },
          [&](const LabelType &) { out += "label"; },
          [&](const OpaqueType &o) { out += o.name; },
      },
      t.variant());
}

} // namespace

bool types_equal(const TypeRef &a, const TypeRef &b) {
  if (a == b)
    return true;
  if (!a || !b)
    return false;
  return *a == *b;
}

bool operator==(const IrType &a, const IrType &b) {
  if (a.v_.index() != b.v_.index())
    return false;
  return std::visit(
      Overloaded{
          [&](const IntType &x) { return x.bits == b.as<IntType>()->bits; },
          [&](const FloatType &x) {
            return x.kind == b.as<FloatType>()->kind;
          },
          [&](const PointerType &x) {
            return types_equal(x.pointee, b.as<PointerType>()->pointee);
          },
          [&](const ArrayType &x) {
            const auto *y = b.as<ArrayType>();
            return x.length == y->length && types_equal(x.element, y->element);
          },
          [&](const VectorType &x) {
            const auto *y = b.as<VectorType>();
            return x.length == y->length && types_equal(x.element, y->element);
          },
          [&](const StructType &x) {
            const auto *y = b.as<StructType>();
            if (x.packed != y->packed || x.fields.size() != y->fields.size())
              return false;
            for (std::size_t i = 0; i < x.fields.size(); ++i)
              if (!types_equal(x.fields[i], y->fields[i]))
                return false;
            return true;
          },
          [](const VoidType &) { return true; },
          [](const LabelType &) { return true; },
          [&](const OpaqueType &x) {
            return x.name == b.as<OpaqueType>()->name;
          },
      },
      a.v_);
}

TypeRef int_type(unsigned bits) {
  if (bits == 0)
    throw InvariantViolation("integer type width must be positive");
  return std::make_shared<const IrType>(IntType{bits});
}

TypeRef float_type(FloatKind kind) {
  return std::make_shared<const IrType>(FloatType{kind});
}

TypeRef pointer_to(TypeRef pointee) {
  if (!pointee)
    throw InvariantViolation("pointee type is null");
  return std::make_shared<const IrType>(PointerType{std::move(pointee)});
}

TypeRef array_of(std::uint64_t length, TypeRef element) {
  check_element(element);
  return std::make_shared<const IrType>(ArrayType{length, std::move(element)});
}

TypeRef vector_of(std::uint64_t length, TypeRef element) {
  check_element(element);
  if (length == 0)
    throw InvariantViolation("vector length must be positive");
  return std::make_shared<const IrType>(
      VectorType{DimLength{length, false}, std::move(element)});
}

TypeRef scalable_vector_of(std::uint64_t multiplier, TypeRef element) {
  check_element(element);
  if (multiplier == 0)
    throw InvariantViolation("vscale multiplier must be positive");
  return std::make_shared<const IrType>(
      VectorType{DimLength{multiplier, true}, std::move(element)});
}

TypeRef struct_of(std::vector<TypeRef> fields, bool packed) {
  for (const auto &f : fields)
    if (!f)
      throw InvariantViolation("struct field type is null");
  return std::make_shared<const IrType>(StructType{std::move(fields), packed});
}

TypeRef void_type() {
  static const TypeRef t = std::make_shared<const IrType>(VoidType{});
  return t;
}

TypeRef label_type() {
  static const TypeRef t = std::make_shared<const IrType>(LabelType{});
  return t;
}

TypeRef opaque_type(std::string name) {
  return std::make_shared<const IrType>(OpaqueType{std::move(name)});
}

std::string type_to_string(const IrType &t) {
  std::string out;
  render(t, out);
  return out;
}

PeeledType peel_aggregate_dims(const TypeRef &t) {
  PeeledType result;
  TypeRef cur = t;
  if (const auto *p = cur->as<PointerType>())
    cur = p->pointee;
  for (;;) {
    if (const auto *a = cur->as<ArrayType>()) {
      result.dims.push_back({DimLength{a->length, false}, cur});
      cur = a->element;
    } else if (const auto *v = cur->as<VectorType>()) {
      result.dims.push_back({v->length, cur});
      cur = v->element;
    } else {
      break;
    }
  }
  result.base = cur;
  return result;
}

} // namespace perfograph::ir
