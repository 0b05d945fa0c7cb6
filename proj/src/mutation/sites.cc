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

#include "mutation/sites.h"

namespace mutforge::internal {
namespace {

class SiteCollector {
 public:
  explicit SiteCollector(ContractDecl& contract) : contract_(contract) {}

  std::vector<Site> Run() {
    for (StateVarDecl& var : contract_.state_vars) {
      if (var.initializer) VisitExpr(*var.initializer, false);
    }
    for (size_t i = 0; i < contract_.modifiers.size(); ++i) {
      current_ = Site{};
      current_.contract = &contract_;
      current_.modifier = &contract_.modifiers[i];
      current_.modifier_index = static_cast<int>(i);
      VisitBlock(contract_.modifiers[i].body, 0);
    }
    for (size_t i = 0; i < contract_.functions.size(); ++i) {
      FunctionDecl& function = contract_.functions[i];
      current_ = Site{};
      current_.contract = &contract_;
      current_.function = &function;
      current_.function_index = static_cast<int>(i);
      for (size_t p = 0; p < function.params.size(); ++p) {
        Site site = Base(SiteKind::kParameter, function.params[p].span);
        site.index = p;
        sites_.push_back(site);
      }
      if (!function.is_constructor) {
        sites_.push_back(Base(SiteKind::kVisibility, function.visibility_span));
      }
      sites_.push_back(Base(SiteKind::kMutability, function.mutability_span));
      for (size_t m = 0; m < function.modifiers.size(); ++m) {
        Site site =
            Base(SiteKind::kModifierInvocation, function.modifiers[m].span);
        site.index = m;
        sites_.push_back(site);
        for (Expr& arg : function.modifiers[m].args) VisitExpr(arg, false);
      }
      VisitBlock(function.body, 0);
    }
    return std::move(sites_);
  }

 private:
  Site Base(SiteKind kind, const SourceSpan& span) const {
    Site site = current_;
    site.kind = kind;
    site.span = span;
    site.contract = &contract_;
    return site;
  }

  void VisitBlock(std::vector<Stmt>& block, int loop_depth) {
    for (size_t i = 0; i < block.size(); ++i) {
      Stmt& stmt = block[i];
      switch (stmt.kind) {
        case StmtKind::kIf:
          VisitExpr(stmt.exprs[0], false);
          VisitBlock(stmt.body, loop_depth);
          VisitBlock(stmt.else_body, loop_depth);
          continue;
        case StmtKind::kWhile:
          VisitExpr(stmt.exprs[0], false);
          VisitBlock(stmt.body, loop_depth + 1);
          continue;
        case StmtKind::kPlaceholder:
          continue;
        default:
          break;
      }
      Site site = Base(SiteKind::kStatement, stmt.span);
      site.block = &block;
      site.index = i;
      site.loop_depth = loop_depth;
      sites_.push_back(site);
      if (stmt.kind == StmtKind::kAssign) {
        VisitExpr(stmt.exprs[0], true);
        VisitExpr(stmt.exprs[1], false);
        continue;
      }
      for (Expr& expr : stmt.exprs) VisitExpr(expr, false);
    }
  }

  void VisitExpr(Expr& expr, bool is_lvalue) {
    auto push = [&](SiteKind kind) {
      Site site = Base(kind, expr.span);
      site.expr = &expr;
      site.is_lvalue = is_lvalue;
      sites_.push_back(site);
    };
    switch (expr.kind) {
      case ExprKind::kIntLiteral:
      case ExprKind::kBoolLiteral:
      case ExprKind::kStringLiteral:
      case ExprKind::kAddressLiteral:
        push(SiteKind::kLiteral);
        return;
      case ExprKind::kIdentifier:
        push(SiteKind::kIdentifier);
        return;
      case ExprKind::kBuiltin:
        push(SiteKind::kBuiltin);
        return;
      case ExprKind::kIndex:
        push(SiteKind::kIndex);
        VisitExpr(expr.operands[0], false);
        return;
      case ExprKind::kBinary:
        push(SiteKind::kBinary);
        VisitExpr(expr.operands[0], false);
        VisitExpr(expr.operands[1], false);
        return;
      case ExprKind::kUnary: {
        push(SiteKind::kUnary);
        bool writes = expr.unary_op == UnaryOp::kPostInc ||
                      expr.unary_op == UnaryOp::kPostDec;
        VisitExpr(expr.operands[0], writes);
        return;
      }
      case ExprKind::kCall:
        for (Expr& arg : expr.operands) VisitExpr(arg, false);
        return;
    }
  }

  ContractDecl& contract_;
  Site current_;
  std::vector<Site> sites_;
};

}  // namespace

std::vector<Site> EnumerateSites(SourceUnit& unit, size_t contract_index) {
  if (contract_index >= unit.contracts.size()) return {};
  return SiteCollector(unit.contracts[contract_index]).Run();
}

}  // namespace mutforge::internal
