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

#include "mutforge/frontend/parser.h"

#include <charconv>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mutforge/frontend/lexer.h"

namespace mutforge {
namespace {

// Thrown internally to unwind to Parse(); never escapes this file.
struct ParseError {
  Diagnostic diagnostic;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string file)
      : tokens_(std::move(tokens)), file_(std::move(file)) {}

  SourceUnit ParseUnit() {
    SourceUnit unit;
    unit.file = file_;
    while (!At(TokenKind::kEnd)) {
      unit.contracts.push_back(ParseContract());
    }
    unit.span = SourceSpan{1, 1, 0, Peek().span.end};
    return unit;
  }

 private:
  const Token& Peek(size_t ahead = 0) const {
    size_t index = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[index];
  }
  bool At(TokenKind kind) const { return Peek().kind == kind; }
  bool AtKeyword(std::string_view text) const {
    return Peek().Is(TokenKind::kKeyword, text);
  }
  bool AtPunct(std::string_view text) const {
    return Peek().Is(TokenKind::kPunct, text);
  }
  const Token& Take() {
    const Token& token = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) {
      ++pos_;
    }
    last_end_ = token.span.end;
    return token;
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError{Diagnostic{Severity::kError, DiagnosticCode::kSyntaxError,
                                message, file_, Peek().span}};
  }

  std::string Describe(const Token& token) const {
    return token.kind == TokenKind::kEnd ? "end of input"
                                         : "'" + token.text + "'";
  }

  const Token& ExpectPunct(std::string_view text) {
    if (!AtPunct(text)) {
      Fail("expected '" + std::string(text) + "' but found " +
           Describe(Peek()));
    }
    return Take();
  }
  const Token& ExpectKeyword(std::string_view text) {
    if (!AtKeyword(text)) {
      Fail("expected '" + std::string(text) + "' but found " +
           Describe(Peek()));
    }
    return Take();
  }
  std::string ExpectIdentifier() {
    if (!At(TokenKind::kIdentifier)) {
      Fail("expected identifier but found " + Describe(Peek()));
    }
    return Take().text;
  }

  // Span from the start of begin to the end of the last consumed token.
  SourceSpan Close(const SourceSpan& begin) const {
    return SourceSpan{begin.line, begin.column, begin.begin, last_end_};
  }

  bool AtType() const {
    return AtKeyword("uint") || AtKeyword("bool") || AtKeyword("address") ||
           AtKeyword("string") || AtKeyword("mapping");
  }

  Type ParseType() {
    if (AtKeyword("mapping")) {
      Take();
      ExpectPunct("(");
      ExpectKeyword("address");
      ExpectPunct("=>");
      Type result;
      if (AtKeyword("uint")) {
        result = Type::Mapping(TypeKind::kUint);
      } else if (AtKeyword("bool")) {
        result = Type::Mapping(TypeKind::kBool);
      } else {
        Fail("mapping values must be uint or bool");
      }
      Take();
      ExpectPunct(")");
      return result;
    }
    if (!AtType()) {
      Fail("expected type but found " + Describe(Peek()));
    }
    const std::string& text = Take().text;
    if (text == "uint") return Type::Uint();
    if (text == "bool") return Type::Bool();
    if (text == "address") return Type::Address();
    return Type::String();
  }

  ContractDecl ParseContract() {
    ContractDecl contract;
    SourceSpan begin = ExpectKeyword("contract").span;
    contract.name = ExpectIdentifier();
    ExpectPunct("{");
    while (!AtPunct("}")) {
      if (At(TokenKind::kEnd)) {
        Fail("unterminated contract '" + contract.name + "'");
      }
      ParseMember(contract);
    }
    ExpectPunct("}");
    contract.span = Close(begin);
    return contract;
  }

  void ParseMember(ContractDecl& contract) {
    if (AtKeyword("event")) {
      contract.events.push_back(ParseEvent());
    } else if (AtKeyword("modifier")) {
      contract.modifiers.push_back(ParseModifier());
    } else if (AtKeyword("function") || AtKeyword("constructor")) {
      contract.functions.push_back(ParseFunction());
    } else if (AtType()) {
      contract.state_vars.push_back(ParseStateVar());
    } else {
      Fail("expected contract member but found " + Describe(Peek()));
    }
  }

  EventDecl ParseEvent() {
    EventDecl event;
    SourceSpan begin = Take().span;
    event.name = ExpectIdentifier();
    ExpectPunct("(");
    if (!AtPunct(")")) {
      while (true) {
        Parameter param;
        SourceSpan param_begin = Peek().span;
        param.type = ParseType();
        if (At(TokenKind::kIdentifier)) {
          param.name = Take().text;
        }
        param.span = Close(param_begin);
        event.params.push_back(std::move(param));
        if (!AtPunct(",")) break;
        Take();
      }
    }
    ExpectPunct(")");
    ExpectPunct(";");
    event.span = Close(begin);
    return event;
  }

  std::vector<Parameter> ParseParams() {
    std::vector<Parameter> params;
    ExpectPunct("(");
    if (!AtPunct(")")) {
      while (true) {
        Parameter param;
        SourceSpan param_begin = Peek().span;
        param.type = ParseType();
        param.name = ExpectIdentifier();
        param.span = Close(param_begin);
        params.push_back(std::move(param));
        if (!AtPunct(",")) break;
        Take();
      }
    }
    ExpectPunct(")");
    return params;
  }

  ModifierDecl ParseModifier() {
    ModifierDecl modifier;
    SourceSpan begin = Take().span;
    modifier.name = ExpectIdentifier();
    if (AtPunct("(")) {
      modifier.params = ParseParams();
    }
    modifier.body = ParseBlock();
    modifier.span = Close(begin);
    return modifier;
  }

  FunctionDecl ParseFunction() {
    FunctionDecl function;
    SourceSpan begin = Peek().span;
    if (AtKeyword("constructor")) {
      Take();
      function.is_constructor = true;
      function.name = "constructor";
    } else {
      Take();
      function.name = ExpectIdentifier();
    }
    function.params = ParseParams();
    bool has_visibility = false;
    bool has_mutability = false;
    std::optional<SourceSpan> visibility_span;
    std::optional<SourceSpan> mutability_span;
    while (true) {
      if (AtKeyword("public") || AtKeyword("external") ||
          AtKeyword("internal") || AtKeyword("private")) {
        if (function.is_constructor) {
          Fail("constructors do not take a visibility");
        }
        if (has_visibility) {
          Fail("visibility specified more than once");
        }
        has_visibility = true;
        const Token& token = Take();
        visibility_span = token.span;
        if (token.text == "public") function.visibility = Visibility::kPublic;
        if (token.text == "external") function.visibility = Visibility::kExternal;
        if (token.text == "internal") function.visibility = Visibility::kInternal;
        if (token.text == "private") function.visibility = Visibility::kPrivate;
      } else if (AtKeyword("pure") || AtKeyword("view") ||
                 AtKeyword("payable")) {
        if (has_mutability) {
          Fail("state mutability specified more than once");
        }
        has_mutability = true;
        const Token& token = Take();
        mutability_span = token.span;
        if (token.text == "pure") function.mutability = Mutability::kPure;
        if (token.text == "view") function.mutability = Mutability::kView;
        if (token.text == "payable") function.mutability = Mutability::kPayable;
      } else if (At(TokenKind::kIdentifier)) {
        ModifierInvocation invocation;
        SourceSpan inv_begin = Peek().span;
        invocation.name = Take().text;
        if (AtPunct("(")) {
          invocation.args = ParseArguments();
        }
        invocation.span = Close(inv_begin);
        function.modifiers.push_back(std::move(invocation));
      } else {
        break;
      }
    }
    if (AtKeyword("returns")) {
      if (function.is_constructor) {
        Fail("constructors cannot return a value");
      }
      Take();
      ExpectPunct("(");
      function.return_type = ParseType();
      ExpectPunct(")");
    }
    SourceSpan header = Close(begin);
    function.visibility_span = visibility_span.value_or(header);
    function.mutability_span = mutability_span.value_or(header);
    function.body = ParseBlock();
    function.span = Close(begin);
    return function;
  }

  StateVarDecl ParseStateVar() {
    StateVarDecl var;
    SourceSpan begin = Peek().span;
    var.type = ParseType();
    if (AtKeyword("constant")) {
      Take();
      var.is_constant = true;
    }
    var.name = ExpectIdentifier();
    if (AtPunct("=")) {
      Take();
      var.initializer = ParseExpr();
    }
    ExpectPunct(";");
    var.span = Close(begin);
    return var;
  }

  std::vector<Stmt> ParseBlock() {
    ExpectPunct("{");
    std::vector<Stmt> statements;
    while (!AtPunct("}")) {
      if (At(TokenKind::kEnd)) {
        Fail("unterminated block");
      }
      statements.push_back(ParseStmt());
    }
    ExpectPunct("}");
    return statements;
  }

  Stmt ParseIf() {
    Stmt stmt;
    stmt.kind = StmtKind::kIf;
    SourceSpan begin = Take().span;
    ExpectPunct("(");
    stmt.exprs.push_back(ParseExpr());
    ExpectPunct(")");
    stmt.body = ParseBlock();
    if (AtKeyword("else")) {
      Take();
      stmt.has_else = true;
      if (AtKeyword("if")) {
        stmt.else_body.push_back(ParseIf());
      } else {
        stmt.else_body = ParseBlock();
      }
    }
    stmt.span = Close(begin);
    return stmt;
  }

  Stmt ParseStmt() {
    SourceSpan begin = Peek().span;
    Stmt stmt;
    if (AtKeyword("if")) {
      return ParseIf();
    }
    if (AtKeyword("while")) {
      Take();
      stmt.kind = StmtKind::kWhile;
      ExpectPunct("(");
      stmt.exprs.push_back(ParseExpr());
      ExpectPunct(")");
      stmt.body = ParseBlock();
      stmt.span = Close(begin);
      return stmt;
    }
    if (AtKeyword("return")) {
      Take();
      stmt.kind = StmtKind::kReturn;
      if (!AtPunct(";")) {
        stmt.exprs.push_back(ParseExpr());
      }
    } else if (AtKeyword("break")) {
      Take();
      stmt.kind = StmtKind::kBreak;
    } else if (AtKeyword("continue")) {
      Take();
      stmt.kind = StmtKind::kContinue;
    } else if (AtKeyword("emit")) {
      Take();
      stmt.kind = StmtKind::kEmit;
      stmt.name = ExpectIdentifier();
      stmt.exprs = ParseArguments();
    } else if (AtKeyword("require")) {
      Take();
      stmt.kind = StmtKind::kRequire;
      ExpectPunct("(");
      stmt.exprs.push_back(ParseExpr());
      if (AtPunct(",")) {
        Take();
        stmt.exprs.push_back(ParseExpr());
      }
      ExpectPunct(")");
    } else if (AtKeyword("assert")) {
      Take();
      stmt.kind = StmtKind::kAssert;
      ExpectPunct("(");
      stmt.exprs.push_back(ParseExpr());
      ExpectPunct(")");
    } else if (AtKeyword("transfer")) {
      Take();
      stmt.kind = StmtKind::kTransfer;
      ExpectPunct("(");
      stmt.exprs.push_back(ParseExpr());
      ExpectPunct(",");
      stmt.exprs.push_back(ParseExpr());
      ExpectPunct(")");
    } else if (AtKeyword("_")) {
      Take();
      stmt.kind = StmtKind::kPlaceholder;
    } else if (AtType()) {
      stmt.kind = StmtKind::kVarDecl;
      stmt.decl_type = ParseType();
      stmt.name = ExpectIdentifier();
      if (AtPunct("=")) {
        Take();
        stmt.exprs.push_back(ParseExpr());
      }
    } else {
      Expr expr = ParseExpr();
      std::optional<AssignOp> op;
      if (AtPunct("=")) op = AssignOp::kAssign;
      if (AtPunct("+=")) op = AssignOp::kAddAssign;
      if (AtPunct("-=")) op = AssignOp::kSubAssign;
      if (AtPunct("*=")) op = AssignOp::kMulAssign;
      if (AtPunct("/=")) op = AssignOp::kDivAssign;
      if (op) {
        if (expr.kind != ExprKind::kIdentifier &&
            expr.kind != ExprKind::kIndex) {
          Fail("left-hand side of assignment must be a variable");
        }
        Take();
        stmt.kind = StmtKind::kAssign;
        stmt.assign_op = *op;
        stmt.exprs.push_back(std::move(expr));
        stmt.exprs.push_back(ParseExpr());
      } else {
        stmt.kind = StmtKind::kExpr;
        stmt.exprs.push_back(std::move(expr));
      }
    }
    ExpectPunct(";");
    stmt.span = Close(begin);
    return stmt;
  }

  std::vector<Expr> ParseArguments() {
    std::vector<Expr> args;
    ExpectPunct("(");
    if (!AtPunct(")")) {
      while (true) {
        args.push_back(ParseExpr());
        if (!AtPunct(",")) break;
        Take();
      }
    }
    ExpectPunct(")");
    return args;
  }

  Expr ParseExpr() { return ParseBinary(1); }

  static int Precedence(const Token& token, BinaryOp& op) {
    if (token.kind != TokenKind::kPunct) return 0;
    const std::string& t = token.text;
    if (t == "||") { op = BinaryOp::kOr; return 1; }
    if (t == "&&") { op = BinaryOp::kAnd; return 2; }
    if (t == "==") { op = BinaryOp::kEq; return 3; }
    if (t == "!=") { op = BinaryOp::kNe; return 3; }
    if (t == "<") { op = BinaryOp::kLt; return 4; }
    if (t == "<=") { op = BinaryOp::kLe; return 4; }
    if (t == ">") { op = BinaryOp::kGt; return 4; }
    if (t == ">=") { op = BinaryOp::kGe; return 4; }
    if (t == "+") { op = BinaryOp::kAdd; return 5; }
    if (t == "-") { op = BinaryOp::kSub; return 5; }
    if (t == "*") { op = BinaryOp::kMul; return 6; }
    if (t == "/") { op = BinaryOp::kDiv; return 6; }
    if (t == "%") { op = BinaryOp::kMod; return 6; }
    return 0;
  }

  // Precedence climbing; all binary operators are left-associative.
  Expr ParseBinary(int min_precedence) {
    Expr lhs = ParseUnary();
    while (true) {
      BinaryOp op{};
      int precedence = Precedence(Peek(), op);
      if (precedence == 0 || precedence < min_precedence) {
        return lhs;
      }
      Take();
      Expr rhs = ParseBinary(precedence + 1);
      Expr node;
      node.kind = ExprKind::kBinary;
      node.binary_op = op;
      node.span = SourceSpan{lhs.span.line, lhs.span.column, lhs.span.begin,
                             rhs.span.end};
      node.operands.push_back(std::move(lhs));
      node.operands.push_back(std::move(rhs));
      lhs = std::move(node);
    }
  }

  Expr ParseUnary() {
    if (AtPunct("-") || AtPunct("!")) {
      SourceSpan begin = Peek().span;
      Expr node;
      node.kind = ExprKind::kUnary;
      node.unary_op = Take().text == "-" ? UnaryOp::kNeg : UnaryOp::kNot;
      node.operands.push_back(ParseUnary());
      node.span = Close(begin);
      return node;
    }
    Expr operand = ParsePrimary();
    while (AtPunct("++") || AtPunct("--")) {
      Expr node;
      node.kind = ExprKind::kUnary;
      node.unary_op = Take().text == "++" ? UnaryOp::kPostInc : UnaryOp::kPostDec;
      node.span = Close(operand.span);
      node.operands.push_back(std::move(operand));
      operand = std::move(node);
    }
    return operand;
  }

  Expr ParsePrimary() {
    const Token& token = Peek();
    SourceSpan begin = token.span;
    Expr node;
    if (token.kind == TokenKind::kInteger) {
      node.kind = ExprKind::kIntLiteral;
      const std::string& text = token.text;
      auto [ptr, ec] =
          std::from_chars(text.data(), text.data() + text.size(), node.int_value);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        Fail("integer literal out of range");
      }
      Take();
    } else if (token.kind == TokenKind::kHexAddress) {
      node.kind = ExprKind::kAddressLiteral;
      const std::string& text = token.text;
      auto [ptr, ec] = std::from_chars(text.data() + 2, text.data() + text.size(),
                                       node.int_value, 16);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        Fail("address literal out of range");
      }
      Take();
    } else if (token.kind == TokenKind::kString) {
      node.kind = ExprKind::kStringLiteral;
      node.string_value = token.string_value;
      Take();
    } else if (token.Is(TokenKind::kKeyword, "true") ||
               token.Is(TokenKind::kKeyword, "false")) {
      node.kind = ExprKind::kBoolLiteral;
      node.int_value = token.text == "true" ? 1 : 0;
      Take();
    } else if (token.Is(TokenKind::kKeyword, "msg") ||
               token.Is(TokenKind::kKeyword, "tx") ||
               token.Is(TokenKind::kKeyword, "block")) {
      std::string base = Take().text;
      ExpectPunct(".");
      std::string member = At(TokenKind::kIdentifier) ? Take().text : "";
      node.kind = ExprKind::kBuiltin;
      if (base == "msg" && member == "sender") {
        node.builtin = Builtin::kMsgSender;
      } else if (base == "msg" && member == "value") {
        node.builtin = Builtin::kMsgValue;
      } else if (base == "tx" && member == "origin") {
        node.builtin = Builtin::kTxOrigin;
      } else if (base == "block" && member == "timestamp") {
        node.builtin = Builtin::kBlockTimestamp;
      } else {
        Fail("unknown builtin member '" + base + "." + member + "'");
      }
    } else if (token.kind == TokenKind::kIdentifier) {
      node.name = Take().text;
      if (AtPunct("(")) {
        node.kind = ExprKind::kCall;
        node.operands = ParseArguments();
      } else if (AtPunct("[")) {
        Take();
        node.kind = ExprKind::kIndex;
        node.operands.push_back(ParseExpr());
        ExpectPunct("]");
      } else {
        node.kind = ExprKind::kIdentifier;
      }
    } else if (token.Is(TokenKind::kPunct, "(")) {
      Take();
      Expr inner = ParseExpr();
      ExpectPunct(")");
      // Parentheses are not kept in the tree; the printer re-derives them.
      inner.span = Close(begin);
      return inner;
    } else {
      Fail("expected expression but found " + Describe(token));
    }
    node.span = Close(begin);
    return node;
  }

  std::vector<Token> tokens_;
  std::string file_;
  size_t pos_ = 0;
  uint32_t last_end_ = 0;
};

}  // namespace

std::variant<SourceUnit, Diagnostics> Parse(std::string_view text,
                                            const std::string& file) {
  Diagnostics diagnostics;
  std::vector<Token> tokens = Lex(text, file, diagnostics);
  if (HasErrors(diagnostics)) {
    return diagnostics;
  }
  try {
    return Parser(std::move(tokens), file).ParseUnit();
  } catch (const ParseError& error) {
    diagnostics.push_back(error.diagnostic);
    return diagnostics;
  }
}

}  // namespace mutforge
