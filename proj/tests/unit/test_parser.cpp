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

#include "perfograph/errors.hpp"
#include "perfograph/ir/parser.hpp"

#include "golden.hpp"
#include "random_ir.hpp"

#include <gtest/gtest.h>

namespace perfograph::ir {
namespace {

const IrInstruction &inst_at(const IrModule &m, std::size_t block, std::size_t i) {
  return m.functions.at(0).blocks.at(block).instructions.at(i);
}

TEST(Parser, IPlusPlus) {
  const auto r = parse_module(testing::read_data("iplusplus.ll"));
  ASSERT_EQ(r.module.functions.size(), 1u);
  const auto &fn = r.module.functions[0];
  EXPECT_EQ(fn.name, "main");
  ASSERT_EQ(fn.blocks.size(), 1u);
  ASSERT_EQ(fn.blocks[0].instructions.size(), 6u);
  const auto &alloca = inst_at(r.module, 0, 0);
  EXPECT_EQ(alloca.opcode, "alloca");
  EXPECT_EQ(*alloca.result, "i");
  EXPECT_EQ(type_to_string(alloca.result_type), "i32*");
  EXPECT_EQ(type_to_string(alloca.element_type), "i32");
  const auto &store = inst_at(r.module, 0, 1);
  ASSERT_EQ(store.operands.size(), 2u);
  EXPECT_EQ(store.operands[0].kind, OperandKind::NumericLiteral);
  EXPECT_EQ(store.operands[0].spelling(), "0");
  EXPECT_EQ(store.operands[1].kind, OperandKind::LocalRef);
  EXPECT_EQ(store.operands[1].text, "i");
  EXPECT_FALSE(store.result);
  EXPECT_TRUE(r.diagnostics.warnings.empty());
}

TEST(Parser, NestedArrayArrayAndGeps) {
  const auto r = parse_module(testing::read_data("nested_array.ll"));
  const auto &fn = r.module.functions.at(0);
  ASSERT_EQ(fn.params.size(), 2u);
  EXPECT_EQ(type_to_string(fn.params[1].type), "i8**");
  const IrInstruction *arr = fn.find_definition("arr");
  ASSERT_NE(arr, nullptr);
  EXPECT_EQ(type_to_string(arr->result_type), "[2 x [3 x [4 x float]]]*");
  const IrInstruction *gep = fn.find_definition("e23");
  ASSERT_NE(gep, nullptr);
  EXPECT_EQ(gep->opcode, "getelementptr");
  EXPECT_EQ(type_to_string(gep->result_type), "float*");
  EXPECT_EQ(gep->operands.size(), 5u);
  EXPECT_EQ(fn.find_definition("argc"), nullptr);
  EXPECT_TRUE(fn.is_param("argc"));
}

TEST(Parser, BranchesPhiAndImplicitBlocks) {
  const char *src = R"(
define i32 @f(i32 %n) {
  %c = icmp sgt i32 %n, 0
  br i1 %c, label %then, label %done
then:
  %x = add i32 %n, 1
  br label %done
done:
  %r = phi i32 [ %x, %then ], [ 0, %0 ]
  ret i32 %r
}
)";
  const auto m = parse_module(src).module;
  const auto &fn = m.functions.at(0);
  ASSERT_EQ(fn.blocks.size(), 3u);
  EXPECT_EQ(fn.blocks[0].label, "0");
  const auto &br = fn.blocks[0].instructions.back();
  EXPECT_EQ(br.successors, (std::vector<std::string>{"then", "done"}));
  const auto &phi = fn.blocks[2].instructions[0];
  EXPECT_EQ(phi.opcode, "phi");
  EXPECT_EQ(phi.incoming_blocks, (std::vector<std::string>{"then", "0"}));
  EXPECT_EQ(type_to_string(fn.blocks[0].instructions[0].result_type), "i1");
}

TEST(Parser, UnlabeledInstructionAfterTerminatorStartsNumberedBlock) {
  const char *src = R"(
define void @g() {
  br label %1
  ret void
}
)";
  const auto m = parse_module(src).module;
  ASSERT_EQ(m.functions[0].blocks.size(), 2u);
  EXPECT_EQ(m.functions[0].blocks[1].label, "1");
}

TEST(Parser, SwitchCallsAndDeclarations) {
  const char *src = R"(
@counter = global i32 0, align 4
@.str = private unnamed_addr constant [4 x i8] c"%d\0A\00", align 1
declare i32 @printf(i8*, ...)

define i32 @h(i32 %v, i32 (i32)* %fp) {
entry:
  switch i32 %v, label %other [
    i32 0, label %zero
    i32 1, label %other
  ]
zero:
  %a = call i32 (i8*, ...) @printf(i8* null)
  %b = call i32 %fp(i32 %a)
  br label %other
other:
  %l = load i32, i32* @counter, align 4
  ret i32 %l
}
)";
  const auto m = parse_module(src).module;
  ASSERT_EQ(m.globals.size(), 2u);
  EXPECT_TRUE(m.globals[1].is_constant);
  EXPECT_TRUE(m.is_external("printf"));
  const auto &fn = m.functions.at(0);
  const auto &sw = fn.blocks[0].instructions[0];
  EXPECT_EQ(sw.opcode, "switch");
  EXPECT_EQ(sw.successors, (std::vector<std::string>{"other", "zero", "other"}));
  const auto &direct = fn.blocks[1].instructions[0];
  EXPECT_EQ(direct.callee, std::optional<std::string>("printf"));
  const auto &indirect = fn.blocks[1].instructions[1];
  EXPECT_FALSE(indirect.callee);
  ASSERT_FALSE(indirect.operands.empty());
  EXPECT_EQ(indirect.operands.back().text, "fp");
  const auto &load = fn.blocks[2].instructions[0];
  EXPECT_EQ(load.operands.at(0).kind, OperandKind::GlobalRef);
}

TEST(Parser, OpaquePointers) {
  const char *src = R"(
define void @p(ptr %q) {
  %s = alloca [4 x i32], align 16
  %e = getelementptr inbounds [4 x i32], ptr %s, i64 0, i64 2
  store i32 7, ptr %e, align 4
  ret void
}
)";
  const auto m = parse_module(src).module;
  const auto &fn = m.functions[0];
  EXPECT_EQ(type_to_string(fn.find_definition("s")->result_type), "ptr");
  EXPECT_EQ(type_to_string(fn.find_definition("s")->element_type), "[4 x i32]");
  EXPECT_EQ(type_to_string(fn.find_definition("e")->result_type), "ptr");
}

TEST(Parser, VectorsAndHexFloats) {
  const char *src = R"(
define void @v(<4 x float>* %p, double* %d) {
  %x = load <4 x float>, <4 x float>* %p, align 16
  %y = fadd <4 x float> %x, %x
  store <4 x float> %y, <4 x float>* %p, align 16
  store double 0x400921FB54442D18, double* %d, align 8
  %z = alloca <vscale x 4 x i32>, align 16
  ret void
}
)";
  const auto m = parse_module(src).module;
  const auto &store = m.functions[0].blocks[0].instructions[3];
  EXPECT_TRUE(store.operands[0].is_hex);
  EXPECT_EQ(store.operands[0].spelling(), "0x400921FB54442D18");
  EXPECT_EQ(type_to_string(m.functions[0].find_definition("z")->result_type),
            "<vscale x 4 x i32>*");
}

TEST(Parser, CommentsMetadataAndAttributesAreSkipped) {
  const char *src = R"(; ModuleID = 'x.c'
source_filename = "x.c"
target datalayout = "e-m:e-i64:64-f80:128-n8:16:32:64-S128"
target triple = "x86_64-pc-linux-gnu"
%struct.S = type { i32, float }

; Function Attrs: noinline nounwind
define dso_local i32 @main() #0 {
entry:
  %s = alloca %struct.S, align 4 ; trailing comment
  ret i32 0, !dbg !12
}

attributes #0 = { noinline nounwind "frame-pointer"="all" }
!llvm.module.flags = !{!0}
!0 = !{i32 1, !"wchar_size", i32 4}
)";
  const auto r = parse_module(src);
  ASSERT_EQ(r.module.functions.size(), 1u);
  EXPECT_EQ(r.module.named_types.size(), 1u);
  EXPECT_EQ(type_to_string(r.module.functions[0].find_definition("s")->result_type),
            "%struct.S*");
}

TEST(Parser, StrictRejectsUnknownOpcode) {
  const char *src = "define void @f() {\n  %x = frobnicate i32 1\n  ret void\n}\n";
  try {
    parse_module(src);
    FAIL() << "expected UnsupportedConstruct";
  } catch (const UnsupportedConstruct &e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Parser, LenientKeepsUnknownOpcodeAsOpaque) {
  const char *src = "define void @f() {\n  %x = frobnicate i32 1\n  ret void\n}\n";
  const auto r = parse_module(src, ParseMode::Lenient);
  const auto &inst = r.module.functions[0].blocks[0].instructions[0];
  EXPECT_TRUE(inst.is_opaque);
  EXPECT_EQ(inst.opcode, "frobnicate");
  EXPECT_EQ(inst.result, std::optional<std::string>("x"));
  EXPECT_FALSE(r.diagnostics.warnings.empty());
}

TEST(Parser, ConstantExpressionStrictVsLenient) {
  const char *src = R"(
@a = global [4 x i32] zeroinitializer
define i32 @f() {
  %v = load i32, i32* getelementptr inbounds ([4 x i32], [4 x i32]* @a, i64 0, i64 1), align 4
  ret i32 %v
}
)";
  EXPECT_THROW(parse_module(src), UnsupportedConstruct);
  const auto r = parse_module(src, ParseMode::Lenient);
  const auto &load = r.module.functions[0].blocks[0].instructions[0];
  EXPECT_FALSE(load.is_opaque);
  ASSERT_EQ(load.operands.size(), 1u);
  EXPECT_EQ(load.operands[0].kind, OperandKind::ConstantExpr);
}

TEST(Parser, DuplicateDefinitionInBothModes) {
  const char *src = "define void @f() {\n  %x = add i32 1, 2\n  %x = add i32 3, 4\n  ret void\n}\n";
  EXPECT_THROW(parse_module(src), DuplicateDefinition);
  EXPECT_THROW(parse_module(src, ParseMode::Lenient), DuplicateDefinition);
  const char *fns = "define void @f() {\n  ret void\n}\ndefine void @f() {\n  ret void\n}\n";
  EXPECT_THROW(parse_module(fns), DuplicateDefinition);
}

TEST(Parser, SyntaxErrorsCarryLine) {
  try {
    parse_module("define i32 @f( {\n");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError &e) {
    EXPECT_EQ(e.line(), 1u);
  }
  EXPECT_THROW(parse_module("this is not IR\n"), SyntaxError);
  EXPECT_THROW(parse_module("define void @f() {\n  ret void\n"), SyntaxError);
}

TEST(Parser, MissingTerminatorAndUnknownSuccessor) {
  const char *no_term = "define void @f() {\n  %x = add i32 1, 2\n}\n";
  EXPECT_THROW(parse_module(no_term), SyntaxError);
  EXPECT_NO_THROW(parse_module(no_term, ParseMode::Lenient));

  const char *bad_target = "define void @f() {\n  br label %nowhere\n}\n";
  EXPECT_THROW(parse_module(bad_target), SyntaxError);
  const auto r = parse_module(bad_target, ParseMode::Lenient);
  EXPECT_TRUE(r.module.functions[0].blocks[0].instructions[0].successors.empty());
}

TEST(Parser, EmptyModule) {
  const auto r = parse_module("");
  EXPECT_TRUE(r.module.functions.empty());
  EXPECT_EQ(r.module.name, "module");
}

TEST(Parser, RandomModulesParseStrictly) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::string src = testing::random_module(seed);
    EXPECT_NO_THROW(parse_module(src)) << src;
  }
}

} // namespace
} // namespace perfograph::ir
