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

#include "mutforge/frontend/printer.h"

#include <sstream>

namespace mutforge {
namespace {

constexpr int kPrimaryPrecedence = 9;
constexpr int kPostfixPrecedence = 8;
constexpr int kPrefixPrecedence = 7;

int BinaryPrecedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::kOr:
      return 1;
    case BinaryOp::kAnd:
      return 2;
    case BinaryOp::kEq:
    case BinaryOp::kNe:
      return 3;
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe:
      return 4;
    case BinaryOp::kAdd:
    case BinaryOp::kSub:
      return 5;
    case BinaryOp::kMul:
    case BinaryOp::kDiv:
    case BinaryOp::kMod:
      return 6;
  }
  return 0;
}

int ExprPrecedence(const Expr& expr) {
  if (expr.kind == ExprKind::kBinary) {
    return BinaryPrecedence(expr.binary_op);
  }
  if (expr.kind == ExprKind::kUnary) {
    return expr.unary_op == UnaryOp::kNeg || expr.unary_op == UnaryOp::kNot
               ? kPrefixPrecedence
               : kPostfixPrecedence;
  }
  return kPrimaryPrecedence;
}

std::string Quote(const std::string& value) {
  std::string out = "\"";
  for (char c : value) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::string Wrap(const Expr& expr, bool parenthesize) {
  std::string text = PrintExpr(expr);
  return parenthesize ? "(" + text + ")" : text;
}

std::string JoinArgs(const std::vector<Expr>& args) {
  std::string out;
  for (size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ", ";
    out += PrintExpr(args[i]);
  }
  return out;
}

std::string JoinParams(const std::vector<Parameter>& params) {
  std::string out;
  for (size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ", ";
    out += TypeName(params[i].type);
    if (!params[i].name.empty()) {
      out += " " + params[i].name;
    }
  }
  return out;
}

class UnitPrinter {
 public:
  std::string Run(const SourceUnit& unit) {
    for (size_t i = 0; i < unit.contracts.size(); ++i) {
      if (i > 0) out_ << "\n";
      PrintContract(unit.contracts[i]);
    }
    return out_.str();
  }

 private:
  void Line(int indent, const std::string& text) {
    out_ << std::string(static_cast<size_t>(indent) * 4, ' ') << text << "\n";
  }

  void PrintContract(const ContractDecl& contract) {
    Line(0, "contract " + contract.name + " {");
    for (const StateVarDecl& var : contract.state_vars) {
      std::string text = TypeName(var.type);
      if (var.is_constant) text += " constant";
      text += " " + var.name;
      if (var.initializer) text += " = " + PrintExpr(*var.initializer);
      Line(1, text + ";");
    }
    for (const EventDecl& event : contract.events) {
      Line(1, "event " + event.name + "(" + JoinParams(event.params) + ");");
    }
    for (const ModifierDecl& modifier : contract.modifiers) {
      out_ << "\n";
      Line(1, "modifier " + modifier.name + "(" + JoinParams(modifier.params) +
                  ") {");
      PrintBlock(modifier.body, 2);
      Line(1, "}");
    }
    for (const FunctionDecl& function : contract.functions) {
      out_ << "\n";
      Line(1, PrintFunctionHeader(function));
      PrintBlock(function.body, 2);
      Line(1, "}");
    }
    Line(0, "}");
  }

  void PrintBlock(const std::vector<Stmt>& body, int indent) {
    for (const Stmt& stmt : body) {
      PrintStmt(stmt, indent);
    }
  }

  void PrintIf(const Stmt& stmt, int indent, const std::string& prefix) {
    Line(indent, prefix + "if(" + PrintExpr(stmt.exprs[0]) + ") {");
    PrintBlock(stmt.body, indent + 1);
    if (!stmt.has_else) {
      Line(indent, "}");
      return;
    }
    if (stmt.else_body.size() == 1 && stmt.else_body[0].kind == StmtKind::kIf) {
      PrintIf(stmt.else_body[0], indent, "} else ");
      return;
    }
    Line(indent, "} else {");
    PrintBlock(stmt.else_body, indent + 1);
    Line(indent, "}");
  }

  void PrintStmt(const Stmt& stmt, int indent) {
    switch (stmt.kind) {
      case StmtKind::kVarDecl: {
        std::string text = TypeName(stmt.decl_type) + " " + stmt.name;
        if (!stmt.exprs.empty()) text += " = " + PrintExpr(stmt.exprs[0]);
        Line(indent, text + ";");
        break;
      }
      case StmtKind::kAssign:
        Line(indent, PrintExpr(stmt.exprs[0]) + " " +
                         AssignOpSpelling(stmt.assign_op) + " " +
                         PrintExpr(stmt.exprs[1]) + ";");
        break;
      case StmtKind::kIf:
        PrintIf(stmt, indent, "");
        break;
      case StmtKind::kWhile:
        Line(indent, "while(" + PrintExpr(stmt.exprs[0]) + ") {");
        PrintBlock(stmt.body, indent + 1);
        Line(indent, "}");
        break;
      case StmtKind::kReturn:
        Line(indent, stmt.exprs.empty()
                         ? "return;"
                         : "return " + PrintExpr(stmt.exprs[0]) + ";");
        break;
      case StmtKind::kBreak:
        Line(indent, "break;");
        break;
      case StmtKind::kContinue:
        Line(indent, "continue;");
        break;
      case StmtKind::kExpr:
        Line(indent, PrintExpr(stmt.exprs[0]) + ";");
        break;
      case StmtKind::kEmit:
        Line(indent, "emit " + stmt.name + "(" + JoinArgs(stmt.exprs) + ");");
        break;
      case StmtKind::kRequire:
        Line(indent, "require(" + JoinArgs(stmt.exprs) + ");");
        break;
      case StmtKind::kAssert:
        Line(indent, "assert(" + JoinArgs(stmt.exprs) + ");");
        break;
      case StmtKind::kTransfer:
        Line(indent, "transfer(" + JoinArgs(stmt.exprs) + ");");
        break;
      case StmtKind::kPlaceholder:
        Line(indent, "_;");
        break;
    }
  }

  std::ostringstream out_;
};

}  // namespace

std::string PrintExpr(const Expr& expr) {
  switch (expr.kind) {
    case ExprKind::kIntLiteral:
      return std::to_string(expr.int_value);
    case ExprKind::kBoolLiteral:
      return expr.int_value != 0 ? "true" : "false";
    case ExprKind::kStringLiteral:
      return Quote(expr.string_value);
    case ExprKind::kAddressLiteral: {
      std::ostringstream out;
      out << "0x" << std::hex << expr.int_value;
      return out.str();
    }
    case ExprKind::kIdentifier:
      return expr.name;
    case ExprKind::kBuiltin:
      return BuiltinSpelling(expr.builtin);
    case ExprKind::kIndex:
      return expr.name + "[" + PrintExpr(expr.operands[0]) + "]";
    case ExprKind::kCall:
      return expr.name + "(" + JoinArgs(expr.operands) + ")";
    case ExprKind::kBinary: {
      int precedence = BinaryPrecedence(expr.binary_op);
      const Expr& lhs = expr.operands[0];
      const Expr& rhs = expr.operands[1];
      return Wrap(lhs, ExprPrecedence(lhs) < precedence) + " " +
             BinaryOpSpelling(expr.binary_op) + " " +
             Wrap(rhs, ExprPrecedence(rhs) <= precedence);
    }
    case ExprKind::kUnary: {
      const Expr& operand = expr.operands[0];
      if (expr.unary_op == UnaryOp::kNeg || expr.unary_op == UnaryOp::kNot) {
        // A nested prefix operator is parenthesized so "-(-x)" never prints as
        // the decrement token.
        bool paren = ExprPrecedence(operand) < kPostfixPrecedence;
        return std::string(UnaryOpSpelling(expr.unary_op)) + Wrap(operand, paren);
      }
      return Wrap(operand, ExprPrecedence(operand) < kPrimaryPrecedence) +
             UnaryOpSpelling(expr.unary_op);
    }
  }
  return "";
}

std::string PrintFunctionHeader(const FunctionDecl& function) {
  std::string text = function.is_constructor
                         ? std::string("constructor(")
                         : "function " + function.name + "(";
  text += JoinParams(function.params) + ")";
  if (!function.is_constructor) {
    text += std::string(" ") + VisibilityName(function.visibility);
  }
  if (function.mutability != Mutability::kNonpayable) {
    text += std::string(" ") + MutabilityKeyword(function.mutability);
  }
  for (const ModifierInvocation& modifier : function.modifiers) {
    text += " " + modifier.name;
    if (!modifier.args.empty()) {
      text += "(" + JoinArgs(modifier.args) + ")";
    }
  }
  if (function.return_type) {
    text += " returns (" + TypeName(*function.return_type) + ")";
  }
  return text + " {";
}

std::string Print(const SourceUnit& unit) { return UnitPrinter().Run(unit); }

}  // namespace mutforge
