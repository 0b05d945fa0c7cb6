// Copyright 2026 The MutForge Project Authors
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

#ifndef MUTFORGE_FRONTEND_AST_H_
#define MUTFORGE_FRONTEND_AST_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mutforge/frontend/diagnostic.h"

namespace mutforge {

enum class TypeKind { kVoid, kUint, kBool, kAddress, kString, kMapping };

// Mappings are restricted to address => uint and address => bool, so a mapping
// type is fully described by its value kind.
struct Type {
  TypeKind kind = TypeKind::kVoid;
  TypeKind mapping_value = TypeKind::kVoid;

  static Type Void() { return {}; }
  static Type Uint() { return {TypeKind::kUint}; }
  static Type Bool() { return {TypeKind::kBool}; }
  static Type Address() { return {TypeKind::kAddress}; }
  static Type String() { return {TypeKind::kString}; }
  static Type Mapping(TypeKind value) { return {TypeKind::kMapping, value}; }

  bool IsMapping() const { return kind == TypeKind::kMapping; }
  bool operator==(const Type&) const = default;
};

std::string TypeName(const Type& type);

enum class Visibility { kPublic, kExternal, kInternal, kPrivate };
enum class Mutability { kPure, kView, kPayable, kNonpayable };

const char* VisibilityName(Visibility visibility);
// Returns "" for nonpayable, which has no keyword.
const char* MutabilityKeyword(Mutability mutability);
const char* MutabilityName(Mutability mutability);

enum class ExprKind {
  kIntLiteral,
  kBoolLiteral,
  kStringLiteral,
  kAddressLiteral,
  kIdentifier,
  kBinary,
  kUnary,
  kBuiltin,
  kIndex,
  kCall,
};

enum class BinaryOp {
  kAdd, kSub, kMul, kDiv, kMod,
  kLt, kLe, kGt, kGe, kEq, kNe,
  kAnd, kOr,
};

enum class UnaryOp { kNeg, kNot, kPostInc, kPostDec };

enum class Builtin { kMsgSender, kMsgValue, kTxOrigin, kBlockTimestamp };

const char* BinaryOpSpelling(BinaryOp op);
const char* UnaryOpSpelling(UnaryOp op);
const char* BuiltinSpelling(Builtin builtin);

// What an identifier resolved to during checking.
enum class BindingKind { kUnresolved, kStateVar, kConstant, kLocal };

struct Binding {
  BindingKind kind = BindingKind::kUnresolved;
  // State variable index or frame slot, depending on kind.
  int index = -1;
  bool operator==(const Binding&) const = default;
};

struct Expr {
  ExprKind kind = ExprKind::kIntLiteral;
  SourceSpan span;

  // Identifier name, callee name, or mapping name for kIndex.
  std::string name;
  // kIntLiteral / kAddressLiteral value; kBoolLiteral uses 0/1.
  uint64_t int_value = 0;
  // kStringLiteral contents (unescaped).
  std::string string_value;
  BinaryOp binary_op = BinaryOp::kAdd;
  UnaryOp unary_op = UnaryOp::kNeg;
  Builtin builtin = Builtin::kMsgSender;
  // Binary: {lhs, rhs}. Unary: {operand}. Index: {key}. Call: arguments.
  std::vector<Expr> operands;

  // Annotations written by Check(); ignored by structural equality.
  Type type;
  Binding binding;
  // For identifiers and mapping indexes: names of the locals and parameters
  // visible at this point, in declaration order.
  std::vector<std::string> visible_locals;
};

enum class StmtKind {
  kVarDecl,
  kAssign,
  kIf,
  kWhile,
  kReturn,
  kBreak,
  kContinue,
  kExpr,
  kEmit,
  kRequire,
  kAssert,
  kTransfer,
  kPlaceholder,
};

enum class AssignOp { kAssign, kAddAssign, kSubAssign, kMulAssign, kDivAssign };

const char* AssignOpSpelling(AssignOp op);

struct Stmt {
  StmtKind kind = StmtKind::kExpr;
  SourceSpan span;

  // kVarDecl: declared type and name. kEmit: event name.
  Type decl_type;
  std::string name;
  AssignOp assign_op = AssignOp::kAssign;
  // kVarDecl: optional initializer. kAssign: {target, value}. kIf/kWhile:
  // {condition}. kReturn: optional value. kExpr: {expr}. kEmit: arguments.
  // kRequire: {condition, optional message}. kAssert: {condition}.
  // kTransfer: {recipient, amount}.
  std::vector<Expr> exprs;
  std::vector<Stmt> body;
  std::vector<Stmt> else_body;
  bool has_else = false;

  // Annotation: frame slot of a declared local.
  int local_slot = -1;
};

struct Parameter {
  Type type;
  std::string name;
  SourceSpan span;
};

struct ModifierInvocation {
  std::string name;
  std::vector<Expr> args;
  SourceSpan span;
};

struct FunctionDecl {
  std::string name;
  std::vector<Parameter> params;
  std::optional<Type> return_type;
  Visibility visibility = Visibility::kPublic;
  Mutability mutability = Mutability::kNonpayable;
  std::vector<ModifierInvocation> modifiers;
  std::vector<Stmt> body;
  bool is_constructor = false;
  SourceSpan span;
  // Span of the explicit visibility / mutability keyword, or the header span
  // when the qualifier is implicit.
  SourceSpan visibility_span;
  SourceSpan mutability_span;

  // Annotation: total frame slots (parameters first, then locals).
  int frame_size = 0;
};

struct ModifierDecl {
  std::string name;
  std::vector<Parameter> params;
  std::vector<Stmt> body;
  SourceSpan span;
  int frame_size = 0;
};

struct EventDecl {
  std::string name;
  std::vector<Parameter> params;
  SourceSpan span;
};

struct StateVarDecl {
  Type type;
  std::string name;
  bool is_constant = false;
  std::optional<Expr> initializer;
  SourceSpan span;
};

struct ContractDecl {
  std::string name;
  std::vector<StateVarDecl> state_vars;
  std::vector<EventDecl> events;
  std::vector<ModifierDecl> modifiers;
  std::vector<FunctionDecl> functions;
  SourceSpan span;
};

struct SourceUnit {
  std::string file;
  std::vector<ContractDecl> contracts;
  SourceSpan span;
};

// Equality of syntax only: spans and checker annotations are ignored.
bool StructurallyEqual(const Expr& a, const Expr& b);
bool StructurallyEqual(const Stmt& a, const Stmt& b);
bool StructurallyEqual(const SourceUnit& a, const SourceUnit& b);

}  // namespace mutforge

#endif  // MUTFORGE_FRONTEND_AST_H_
