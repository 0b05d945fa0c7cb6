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

#include "mutforge/frontend/ast.h"

namespace mutforge {

namespace {

const char* ScalarName(TypeKind kind) {
  switch (kind) {
    case TypeKind::kVoid:
      return "void";
    case TypeKind::kUint:
      return "uint";
    case TypeKind::kBool:
      return "bool";
    case TypeKind::kAddress:
      return "address";
    case TypeKind::kString:
      return "string";
    case TypeKind::kMapping:
      return "mapping";
  }
  return "?";
}

template <typename T, typename Eq>
bool ListEqual(const std::vector<T>& a, const std::vector<T>& b, Eq eq) {
  if (a.size() != b.size()) {
    return false;
  }
  for (size_t i = 0; i < a.size(); ++i) {
    if (!eq(a[i], b[i])) {
      return false;
    }
  }
  return true;
}

bool ExprListEqual(const std::vector<Expr>& a, const std::vector<Expr>& b) {
  return ListEqual(a, b, [](const Expr& x, const Expr& y) {
    return StructurallyEqual(x, y);
  });
}

bool StmtListEqual(const std::vector<Stmt>& a, const std::vector<Stmt>& b) {
  return ListEqual(a, b, [](const Stmt& x, const Stmt& y) {
    return StructurallyEqual(x, y);
  });
}

bool ParamsEqual(const std::vector<Parameter>& a,
                 const std::vector<Parameter>& b) {
  return ListEqual(a, b, [](const Parameter& x, const Parameter& y) {
    return x.type == y.type && x.name == y.name;
  });
}

bool FunctionsEqual(const FunctionDecl& a, const FunctionDecl& b) {
  return a.name == b.name && ParamsEqual(a.params, b.params) &&
         a.return_type == b.return_type && a.visibility == b.visibility &&
         a.mutability == b.mutability && a.is_constructor == b.is_constructor &&
         ListEqual(a.modifiers, b.modifiers,
                   [](const ModifierInvocation& x,
                      const ModifierInvocation& y) {
                     return x.name == y.name && ExprListEqual(x.args, y.args);
                   }) &&
         StmtListEqual(a.body, b.body);
}

bool ContractsEqual(const ContractDecl& a, const ContractDecl& b) {
  return a.name == b.name &&
         ListEqual(a.state_vars, b.state_vars,
                   [](const StateVarDecl& x, const StateVarDecl& y) {
                     if (x.type != y.type || x.name != y.name ||
                         x.is_constant != y.is_constant ||
                         x.initializer.has_value() !=
                             y.initializer.has_value()) {
                       return false;
                     }
                     return !x.initializer ||
                            StructurallyEqual(*x.initializer, *y.initializer);
                   }) &&
         ListEqual(a.events, b.events,
                   [](const EventDecl& x, const EventDecl& y) {
                     return x.name == y.name && ParamsEqual(x.params, y.params);
                   }) &&
         ListEqual(a.modifiers, b.modifiers,
                   [](const ModifierDecl& x, const ModifierDecl& y) {
                     return x.name == y.name &&
                            ParamsEqual(x.params, y.params) &&
                            StmtListEqual(x.body, y.body);
                   }) &&
         ListEqual(a.functions, b.functions, FunctionsEqual);
}

}  // namespace

std::string TypeName(const Type& type) {
  if (type.kind == TypeKind::kMapping) {
    return std::string("mapping(address => ") + ScalarName(type.mapping_value) +
           ")";
  }
  return ScalarName(type.kind);
}

const char* VisibilityName(Visibility visibility) {
  switch (visibility) {
    case Visibility::kPublic:
      return "public";
    case Visibility::kExternal:
      return "external";
    case Visibility::kInternal:
      return "internal";
    case Visibility::kPrivate:
      return "private";
  }
  return "?";
}

const char* MutabilityKeyword(Mutability mutability) {
  switch (mutability) {
    case Mutability::kPure:
      return "pure";
    case Mutability::kView:
      return "view";
    case Mutability::kPayable:
      return "payable";
    case Mutability::kNonpayable:
      return "";
  }
  return "?";
}

const char* MutabilityName(Mutability mutability) {
  return mutability == Mutability::kNonpayable ? "nonpayable"
                                               : MutabilityKeyword(mutability);
}

const char* BinaryOpSpelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd:
      return "+";
    case BinaryOp::kSub:
      return "-";
    case BinaryOp::kMul:
      return "*";
    case BinaryOp::kDiv:
      return "/";
    case BinaryOp::kMod:
      return "%";
    case BinaryOp::kLt:
      return "<";
    case BinaryOp::kLe:
      return "<=";
    case BinaryOp::kGt:
      return ">";
    case BinaryOp::kGe:
      return ">=";
    case BinaryOp::kEq:
      return "==";
    case BinaryOp::kNe:
      return "!=";
    case BinaryOp::kAnd:
      return "&&";
    case BinaryOp::kOr:
      return "||";
  }
  return "?";
}

const char* UnaryOpSpelling(UnaryOp op) {
  switch (op) {
    case UnaryOp::kNeg:
      return "-";
    case UnaryOp::kNot:
      return "!";
    case UnaryOp::kPostInc:
      return "++";
    case UnaryOp::kPostDec:
      return "--";
  }
  return "?";
}

const char* BuiltinSpelling(Builtin builtin) {
  switch (builtin) {
    case Builtin::kMsgSender:
      return "msg.sender";
    case Builtin::kMsgValue:
      return "msg.value";
    case Builtin::kTxOrigin:
      return "tx.origin";
    case Builtin::kBlockTimestamp:
      return "block.timestamp";
  }
  return "?";
}

const char* AssignOpSpelling(AssignOp op) {
  switch (op) {
    case AssignOp::kAssign:
      return "=";
    case AssignOp::kAddAssign:
      return "+=";
    case AssignOp::kSubAssign:
      return "-=";
    case AssignOp::kMulAssign:
      return "*=";
    case AssignOp::kDivAssign:
      return "/=";
  }
  return "?";
}

bool StructurallyEqual(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) {
    return false;
  }
  switch (a.kind) {
    case ExprKind::kIntLiteral:
    case ExprKind::kBoolLiteral:
    case ExprKind::kAddressLiteral:
      return a.int_value == b.int_value;
    case ExprKind::kStringLiteral:
      return a.string_value == b.string_value;
    case ExprKind::kIdentifier:
      return a.name == b.name;
    case ExprKind::kBinary:
      return a.binary_op == b.binary_op && ExprListEqual(a.operands, b.operands);
    case ExprKind::kUnary:
      return a.unary_op == b.unary_op && ExprListEqual(a.operands, b.operands);
    case ExprKind::kBuiltin:
      return a.builtin == b.builtin;
    case ExprKind::kIndex:
    case ExprKind::kCall:
      return a.name == b.name && ExprListEqual(a.operands, b.operands);
  }
  return false;
}

bool StructurallyEqual(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind || !ExprListEqual(a.exprs, b.exprs) ||
      !StmtListEqual(a.body, b.body) || !StmtListEqual(a.else_body, b.else_body) ||
      a.has_else != b.has_else) {
    return false;
  }
  switch (a.kind) {
    case StmtKind::kVarDecl:
      return a.decl_type == b.decl_type && a.name == b.name;
    case StmtKind::kAssign:
      return a.assign_op == b.assign_op;
    case StmtKind::kEmit:
      return a.name == b.name;
    default:
      return true;
  }
}

bool StructurallyEqual(const SourceUnit& a, const SourceUnit& b) {
  return ListEqual(a.contracts, b.contracts, ContractsEqual);
}

}  // namespace mutforge
