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

#include "mutforge/frontend/checker.h"

#include <optional>
#include <set>
#include <utility>

namespace mutforge {

const LocalInfo* ContractSymbols::FindLocal(int function,
                                            const std::string& name) const {
  for (const LocalInfo& local : function_frames.at(function)) {
    if (local.name == name) {
      return &local;
    }
  }
  return nullptr;
}

namespace {

// State touched by a function or modifier body, with the first offending span
// of each kind so that diagnostics point somewhere useful.
struct Effects {
  std::optional<SourceSpan> reads_state;
  std::optional<SourceSpan> writes_state;
  std::optional<SourceSpan> reads_env;
  std::optional<SourceSpan> reads_value;
  std::optional<SourceSpan> emits;
  std::optional<SourceSpan> transfers;

  void Merge(const Effects& other) {
    if (!reads_state) reads_state = other.reads_state;
    if (!writes_state) writes_state = other.writes_state;
    if (!reads_env) reads_env = other.reads_env;
    if (!reads_value) reads_value = other.reads_value;
    if (!emits) emits = other.emits;
    if (!transfers) transfers = other.transfers;
  }
};

void Note(std::optional<SourceSpan>& slot, const SourceSpan& span) {
  if (!slot) slot = span;
}

enum class BodyKind { kFunction, kModifier, kInitializer };

class Checker {
 public:
  explicit Checker(const SourceUnit& unit) : checked_{unit, {}} {}

  std::variant<CheckedUnit, Diagnostics> Run() {
    std::set<std::string> contract_names;
    for (ContractDecl& contract : checked_.unit.contracts) {
      if (!contract_names.insert(contract.name).second) {
        Error(DiagnosticCode::kDuplicateDeclaration,
              "contract '" + contract.name + "' is already declared",
              contract.span);
      }
      checked_.contracts.emplace_back();
      CheckContract(contract, checked_.contracts.back());
    }
    if (HasErrors(diagnostics_)) {
      return diagnostics_;
    }
    return std::move(checked_);
  }

 private:
  void Error(DiagnosticCode code, const std::string& message,
             const SourceSpan& span) {
    diagnostics_.push_back(
        {Severity::kError, code, message, checked_.unit.file, span});
  }

  void CheckContract(ContractDecl& contract, ContractSymbols& symbols) {
    contract_ = &contract;
    symbols_ = &symbols;
    std::set<std::string> names;
    auto declare = [&](const std::string& name, const SourceSpan& span) {
      if (!names.insert(name).second) {
        Error(DiagnosticCode::kDuplicateDeclaration,
              "'" + name + "' is already declared in contract '" +
                  contract.name + "'",
              span);
      }
    };

    for (size_t i = 0; i < contract.state_vars.size(); ++i) {
      const StateVarDecl& var = contract.state_vars[i];
      declare(var.name, var.span);
      symbols.state_vars.push_back({var.name, var.type, var.is_constant});
      symbols.state_index.emplace(var.name, static_cast<int>(i));
    }
    for (size_t i = 0; i < contract.events.size(); ++i) {
      declare(contract.events[i].name, contract.events[i].span);
      symbols.event_index.emplace(contract.events[i].name, static_cast<int>(i));
      for (const Parameter& param : contract.events[i].params) {
        if (param.type.IsMapping()) {
          Error(DiagnosticCode::kTypeMismatch,
                "event parameters cannot be mappings", param.span);
        }
      }
    }
    for (size_t i = 0; i < contract.modifiers.size(); ++i) {
      declare(contract.modifiers[i].name, contract.modifiers[i].span);
      symbols.modifier_index.emplace(contract.modifiers[i].name,
                                     static_cast<int>(i));
    }
    for (size_t i = 0; i < contract.functions.size(); ++i) {
      declare(contract.functions[i].name, contract.functions[i].span);
      symbols.function_index.emplace(contract.functions[i].name,
                                     static_cast<int>(i));
    }

    for (size_t i = 0; i < contract.state_vars.size(); ++i) {
      CheckStateVar(contract.state_vars[i]);
    }

    modifier_effects_.assign(contract.modifiers.size(), Effects{});
    symbols.modifier_frames.resize(contract.modifiers.size());
    for (size_t i = 0; i < contract.modifiers.size(); ++i) {
      CheckModifier(contract.modifiers[i], static_cast<int>(i));
    }
    symbols.function_frames.resize(contract.functions.size());
    for (size_t i = 0; i < contract.functions.size(); ++i) {
      CheckFunction(contract.functions[i], static_cast<int>(i));
    }
  }

  void CheckStateVar(StateVarDecl& var) {
    if (var.is_constant) {
      if (var.type.IsMapping()) {
        Error(DiagnosticCode::kInvalidContext, "mappings cannot be constant",
              var.span);
        return;
      }
      if (!var.initializer) {
        Error(DiagnosticCode::kInvalidContext,
              "constant '" + var.name + "' must be initialized", var.span);
        return;
      }
      ExprKind kind = var.initializer->kind;
      if (kind != ExprKind::kIntLiteral && kind != ExprKind::kBoolLiteral &&
          kind != ExprKind::kStringLiteral &&
          kind != ExprKind::kAddressLiteral) {
        Error(DiagnosticCode::kInvalidContext,
              "constant '" + var.name + "' must be initialized by a literal",
              var.initializer->span);
        return;
      }
    }
    if (!var.initializer) {
      return;
    }
    if (var.type.IsMapping()) {
      Error(DiagnosticCode::kInvalidContext, "mappings cannot be initialized",
            var.span);
      return;
    }
    BeginBody(BodyKind::kInitializer, Mutability::kNonpayable,
              Visibility::kInternal, std::nullopt);
    std::optional<Type> type = CheckExpr(*var.initializer);
    if (type && *type != var.type) {
      Error(DiagnosticCode::kTypeMismatch,
            "cannot initialize '" + var.name + "' of type " +
                TypeName(var.type) + " with " + TypeName(*type),
            var.initializer->span);
    }
  }

  void BeginBody(BodyKind kind, Mutability mutability, Visibility visibility,
                 std::optional<Type> return_type) {
    body_kind_ = kind;
    mutability_ = mutability;
    visibility_ = visibility;
    return_type_ = return_type;
    effects_ = Effects{};
    frame_.clear();
    scopes_.clear();
    loop_depth_ = 0;
    placeholders_ = 0;
  }

  // Adds a frame slot for a parameter or local. Returns the slot.
  int Declare(const std::string& name, const Type& type, bool is_param,
              const SourceSpan& span) {
    for (const auto& scope : scopes_) {
      for (const auto& [visible, slot] : scope) {
        if (visible == name) {
          Error(DiagnosticCode::kDuplicateDeclaration,
                "'" + name + "' is already declared in this scope", span);
        }
      }
    }
    int slot = static_cast<int>(frame_.size());
    frame_.push_back({name, type, is_param});
    scopes_.back().emplace_back(name, slot);
    return slot;
  }

  void DeclareParams(const std::vector<Parameter>& params) {
    scopes_.emplace_back();
    for (const Parameter& param : params) {
      if (param.type.IsMapping()) {
        Error(DiagnosticCode::kTypeMismatch, "parameters cannot be mappings",
              param.span);
      }
      Declare(param.name, param.type, true, param.span);
    }
  }

  void CheckModifier(ModifierDecl& modifier, int index) {
    BeginBody(BodyKind::kModifier, Mutability::kNonpayable,
              Visibility::kInternal, std::nullopt);
    DeclareParams(modifier.params);
    CheckBlock(modifier.body);
    if (placeholders_ == 0) {
      Error(DiagnosticCode::kInvalidContext,
            "modifier '" + modifier.name + "' has no placeholder statement",
            modifier.span);
    }
    modifier.frame_size = static_cast<int>(frame_.size());
    symbols_->modifier_frames[index] = frame_;
    modifier_effects_[index] = effects_;
  }

  void CheckFunction(FunctionDecl& function, int index) {
    if (function.return_type && function.return_type->IsMapping()) {
      Error(DiagnosticCode::kTypeMismatch, "functions cannot return mappings",
            function.span);
    }
    if (function.is_constructor && (function.mutability == Mutability::kPure ||
                                    function.mutability == Mutability::kView)) {
      Error(DiagnosticCode::kMutabilityViolation,
            "constructors must be payable or non-payable",
            function.mutability_span);
    }
    if (function.mutability == Mutability::kPayable &&
        (function.visibility == Visibility::kInternal ||
         function.visibility == Visibility::kPrivate)) {
      Error(DiagnosticCode::kMutabilityViolation,
            "internal and private functions cannot be payable",
            function.mutability_span);
    }

    BeginBody(BodyKind::kFunction, function.mutability, function.visibility,
              function.return_type);
    if (function.is_constructor) {
      // Constructors may use msg.value when payable, like any entry point.
      visibility_ = Visibility::kPublic;
    }
    DeclareParams(function.params);

    for (ModifierInvocation& invocation : function.modifiers) {
      auto it = symbols_->modifier_index.find(invocation.name);
      std::vector<std::optional<Type>> arg_types;
      for (Expr& arg : invocation.args) {
        arg_types.push_back(CheckExpr(arg));
      }
      if (it == symbols_->modifier_index.end()) {
        Error(DiagnosticCode::kUnknownIdentifier,
              "unknown modifier '" + invocation.name + "'", invocation.span);
        continue;
      }
      const ModifierDecl& modifier = contract_->modifiers[it->second];
      if (modifier.params.size() != invocation.args.size()) {
        Error(DiagnosticCode::kArityMismatch,
              "modifier '" + invocation.name + "' expects " +
                  std::to_string(modifier.params.size()) + " arguments",
              invocation.span);
        continue;
      }
      for (size_t i = 0; i < arg_types.size(); ++i) {
        if (arg_types[i] && *arg_types[i] != modifier.params[i].type) {
          Error(DiagnosticCode::kTypeMismatch,
                "argument " + std::to_string(i + 1) + " of modifier '" +
                    invocation.name + "' must be " +
                    TypeName(modifier.params[i].type),
                invocation.args[i].span);
        }
      }
      const Effects& effects = modifier_effects_[it->second];
      Effects at_invocation;
      auto relocate = [&](const std::optional<SourceSpan>& from,
                          std::optional<SourceSpan>& to) {
        if (from) to = invocation.span;
      };
      relocate(effects.reads_state, at_invocation.reads_state);
      relocate(effects.writes_state, at_invocation.writes_state);
      relocate(effects.reads_env, at_invocation.reads_env);
      relocate(effects.reads_value, at_invocation.reads_value);
      relocate(effects.emits, at_invocation.emits);
      relocate(effects.transfers, at_invocation.transfers);
      EnforceMutability(at_invocation, "modifier '" + invocation.name + "'");
    }

    CheckBlock(function.body);
    function.frame_size = static_cast<int>(frame_.size());
    symbols_->function_frames[index] = frame_;
  }

  // Reports the first effect that the current body's mutability forbids.
  void EnforceMutability(const Effects& effects, const std::string& what) {
    if (body_kind_ != BodyKind::kFunction) {
      return;
    }
    auto violation = [&](const std::optional<SourceSpan>& span,
                         const std::string& action) {
      if (span) {
        Error(DiagnosticCode::kMutabilityViolation,
              what + " " + action + " in a " + MutabilityName(mutability_) +
                  " function",
              *span);
      }
    };
    if (mutability_ == Mutability::kPure) {
      violation(effects.reads_state, "reads contract state");
      violation(effects.reads_env, "reads the environment");
      violation(effects.reads_value, "reads msg.value");
    }
    if (mutability_ == Mutability::kPure || mutability_ == Mutability::kView) {
      violation(effects.writes_state, "writes contract state");
      violation(effects.emits, "emits an event");
      violation(effects.transfers, "transfers value");
    }
    if (mutability_ == Mutability::kNonpayable &&
        (visibility_ == Visibility::kPublic ||
         visibility_ == Visibility::kExternal)) {
      violation(effects.reads_value, "reads msg.value");
    }
  }

  void Touch(std::optional<SourceSpan> Effects::*field, const SourceSpan& span,
             const std::string& what) {
    Effects single;
    single.*field = span;
    EnforceMutability(single, what);
    Note(effects_.*field, span);
  }

  void CheckBlock(std::vector<Stmt>& body) {
    scopes_.emplace_back();
    for (Stmt& stmt : body) {
      CheckStmt(stmt);
    }
    scopes_.pop_back();
  }

  void ExpectType(const std::optional<Type>& actual, const Type& expected,
                  const SourceSpan& span, const std::string& what) {
    if (actual && *actual != expected) {
      Error(DiagnosticCode::kTypeMismatch,
            what + " must be " + TypeName(expected) + ", found " +
                TypeName(*actual),
            span);
    }
  }

  void CheckStmt(Stmt& stmt) {
    switch (stmt.kind) {
      case StmtKind::kVarDecl: {
        if (stmt.decl_type.IsMapping()) {
          Error(DiagnosticCode::kTypeMismatch,
                "local variables cannot be mappings", stmt.span);
        }
        if (!stmt.exprs.empty()) {
          std::optional<Type> init = CheckExpr(stmt.exprs[0]);
          ExpectType(init, stmt.decl_type, stmt.exprs[0].span,
                     "initializer of '" + stmt.name + "'");
        }
        // Declared after the initializer so "uint x = x;" does not resolve.
        stmt.local_slot = Declare(stmt.name, stmt.decl_type, false, stmt.span);
        break;
      }
      case StmtKind::kAssign:
        CheckAssign(stmt);
        break;
      case StmtKind::kIf:
        ExpectType(CheckExpr(stmt.exprs[0]), Type::Bool(), stmt.exprs[0].span,
                   "condition");
        CheckBlock(stmt.body);
        if (stmt.has_else) {
          CheckBlock(stmt.else_body);
        }
        break;
      case StmtKind::kWhile:
        ExpectType(CheckExpr(stmt.exprs[0]), Type::Bool(), stmt.exprs[0].span,
                   "condition");
        ++loop_depth_;
        CheckBlock(stmt.body);
        --loop_depth_;
        break;
      case StmtKind::kReturn:
        CheckReturn(stmt);
        break;
      case StmtKind::kBreak:
      case StmtKind::kContinue:
        if (loop_depth_ == 0) {
          Error(DiagnosticCode::kInvalidContext,
                std::string(stmt.kind == StmtKind::kBreak ? "break"
                                                          : "continue") +
                    " outside of a loop",
                stmt.span);
        }
        break;
      case StmtKind::kExpr:
        CheckExpr(stmt.exprs[0], /*allow_void=*/true);
        break;
      case StmtKind::kEmit:
        CheckEmit(stmt);
        break;
      case StmtKind::kRequire:
        ExpectType(CheckExpr(stmt.exprs[0]), Type::Bool(), stmt.exprs[0].span,
                   "require condition");
        if (stmt.exprs.size() > 1) {
          ExpectType(CheckExpr(stmt.exprs[1]), Type::String(),
                     stmt.exprs[1].span, "require message");
        }
        break;
      case StmtKind::kAssert:
        ExpectType(CheckExpr(stmt.exprs[0]), Type::Bool(), stmt.exprs[0].span,
                   "assert condition");
        break;
      case StmtKind::kTransfer:
        ExpectType(CheckExpr(stmt.exprs[0]), Type::Address(),
                   stmt.exprs[0].span, "transfer recipient");
        ExpectType(CheckExpr(stmt.exprs[1]), Type::Uint(), stmt.exprs[1].span,
                   "transfer amount");
        Touch(&Effects::transfers, stmt.span, "transfer");
        break;
      case StmtKind::kPlaceholder:
        if (body_kind_ != BodyKind::kModifier) {
          Error(DiagnosticCode::kInvalidContext,
                "placeholder statement outside of a modifier", stmt.span);
        }
        ++placeholders_;
        break;
    }
  }

  void CheckReturn(Stmt& stmt) {
    if (body_kind_ == BodyKind::kModifier || !return_type_) {
      if (!stmt.exprs.empty()) {
        CheckExpr(stmt.exprs[0]);
        Error(DiagnosticCode::kTypeMismatch,
              "return with a value in a body without a return type",
              stmt.span);
      }
      return;
    }
    if (stmt.exprs.empty()) {
      Error(DiagnosticCode::kTypeMismatch,
            "missing return value of type " + TypeName(*return_type_),
            stmt.span);
      return;
    }
    ExpectType(CheckExpr(stmt.exprs[0]), *return_type_, stmt.exprs[0].span,
               "return value");
  }

  void CheckEmit(Stmt& stmt) {
    std::vector<std::optional<Type>> arg_types;
    for (Expr& arg : stmt.exprs) {
      arg_types.push_back(CheckExpr(arg));
    }
    Touch(&Effects::emits, stmt.span, "emit");
    auto it = symbols_->event_index.find(stmt.name);
    if (it == symbols_->event_index.end()) {
      Error(DiagnosticCode::kUnknownIdentifier,
            "unknown event '" + stmt.name + "'", stmt.span);
      return;
    }
    const EventDecl& event = contract_->events[it->second];
    if (event.params.size() != stmt.exprs.size()) {
      Error(DiagnosticCode::kArityMismatch,
            "event '" + stmt.name + "' expects " +
                std::to_string(event.params.size()) + " arguments",
            stmt.span);
      return;
    }
    for (size_t i = 0; i < arg_types.size(); ++i) {
      ExpectType(arg_types[i], event.params[i].type, stmt.exprs[i].span,
                 "argument " + std::to_string(i + 1) + " of event '" +
                     stmt.name + "'");
    }
  }

  // Validates an assignable location and records the write.
  std::optional<Type> CheckLValue(Expr& target) {
    std::optional<Type> type = CheckExpr(target, false, /*is_write=*/true);
    if (!type) {
      return std::nullopt;
    }
    if (target.kind != ExprKind::kIdentifier && target.kind != ExprKind::kIndex) {
      Error(DiagnosticCode::kTypeMismatch, "expression is not assignable",
            target.span);
      return std::nullopt;
    }
    if (target.binding.kind == BindingKind::kConstant) {
      Error(DiagnosticCode::kConstantAssignment,
            "cannot assign to constant '" + target.name + "'", target.span);
      return std::nullopt;
    }
    if (target.binding.kind == BindingKind::kStateVar) {
      Touch(&Effects::writes_state, target.span, "assignment to '" + target.name + "'");
    }
    return type;
  }

  void CheckAssign(Stmt& stmt) {
    std::optional<Type> target = CheckLValue(stmt.exprs[0]);
    std::optional<Type> value = CheckExpr(stmt.exprs[1]);
    if (stmt.assign_op != AssignOp::kAssign) {
      ExpectType(target, Type::Uint(), stmt.exprs[0].span,
                 std::string("target of '") + AssignOpSpelling(stmt.assign_op) +
                     "'");
      ExpectType(value, Type::Uint(), stmt.exprs[1].span,
                 std::string("operand of '") +
                     AssignOpSpelling(stmt.assign_op) + "'");
      return;
    }
    if (target && value && *target != *value) {
      Error(DiagnosticCode::kTypeMismatch,
            "cannot assign " + TypeName(*value) + " to " + TypeName(*target),
            stmt.exprs[1].span);
    }
  }

  std::vector<std::string> VisibleLocals() const {
    std::vector<std::string> names;
    for (const auto& scope : scopes_) {
      for (const auto& [name, slot] : scope) {
        names.push_back(name);
      }
    }
    return names;
  }

  std::optional<int> LookupLocal(const std::string& name) const {
    for (auto scope = scopes_.rbegin(); scope != scopes_.rend(); ++scope) {
      for (const auto& [visible, slot] : *scope) {
        if (visible == name) return slot;
      }
    }
    return std::nullopt;
  }

  std::optional<Type> CheckExpr(Expr& expr, bool allow_void = false,
                                bool is_write = false) {
    std::optional<Type> type = CheckExprInner(expr, is_write);
    if (type && *type == Type::Void() && !allow_void) {
      Error(DiagnosticCode::kTypeMismatch,
            "expression of type void used as a value", expr.span);
      type = std::nullopt;
    }
    if (type && type->IsMapping() && expr.kind == ExprKind::kIdentifier) {
      Error(DiagnosticCode::kTypeMismatch,
            "mapping '" + expr.name + "' can only be indexed", expr.span);
      type = std::nullopt;
    }
    if (type) {
      expr.type = *type;
    }
    return type;
  }

  std::optional<Type> CheckIdentifier(Expr& expr, bool is_write) {
    expr.visible_locals = VisibleLocals();
    if (std::optional<int> slot = LookupLocal(expr.name)) {
      expr.binding = {BindingKind::kLocal, *slot};
      return frame_[*slot].type;
    }
    auto it = symbols_->state_index.find(expr.name);
    if (it == symbols_->state_index.end()) {
      Error(DiagnosticCode::kUnknownIdentifier,
            "unknown identifier '" + expr.name + "'", expr.span);
      return std::nullopt;
    }
    const StateVarInfo& var = symbols_->state_vars[it->second];
    expr.binding = {var.is_constant ? BindingKind::kConstant
                                    : BindingKind::kStateVar,
                    it->second};
    if (!var.is_constant && !is_write) {
      Touch(&Effects::reads_state, expr.span, "read of '" + expr.name + "'");
    }
    return var.type;
  }

  std::optional<Type> CheckExprInner(Expr& expr, bool is_write) {
    switch (expr.kind) {
      case ExprKind::kIntLiteral:
        return Type::Uint();
      case ExprKind::kBoolLiteral:
        return Type::Bool();
      case ExprKind::kStringLiteral:
        return Type::String();
      case ExprKind::kAddressLiteral:
        return Type::Address();
      case ExprKind::kIdentifier:
        return CheckIdentifier(expr, is_write);
      case ExprKind::kBuiltin:
        switch (expr.builtin) {
          case Builtin::kMsgValue:
            Touch(&Effects::reads_value, expr.span, "msg.value");
            return Type::Uint();
          case Builtin::kMsgSender:
            Touch(&Effects::reads_env, expr.span, "msg.sender");
            return Type::Address();
          case Builtin::kTxOrigin:
            Touch(&Effects::reads_env, expr.span, "tx.origin");
            return Type::Address();
          case Builtin::kBlockTimestamp:
            Touch(&Effects::reads_env, expr.span, "block.timestamp");
            return Type::Uint();
        }
        return std::nullopt;
      case ExprKind::kIndex: {
        expr.visible_locals = VisibleLocals();
        std::optional<Type> key = CheckExpr(expr.operands[0]);
        if (LookupLocal(expr.name)) {
          Error(DiagnosticCode::kTypeMismatch,
                "'" + expr.name + "' is not a mapping", expr.span);
          return std::nullopt;
        }
        auto it = symbols_->state_index.find(expr.name);
        if (it == symbols_->state_index.end()) {
          Error(DiagnosticCode::kUnknownIdentifier,
                "unknown identifier '" + expr.name + "'", expr.span);
          return std::nullopt;
        }
        const StateVarInfo& var = symbols_->state_vars[it->second];
        if (!var.type.IsMapping()) {
          Error(DiagnosticCode::kTypeMismatch,
                "'" + expr.name + "' is not a mapping", expr.span);
          return std::nullopt;
        }
        expr.binding = {BindingKind::kStateVar, it->second};
        ExpectType(key, Type::Address(), expr.operands[0].span, "mapping key");
        if (!is_write) {
          Touch(&Effects::reads_state, expr.span,
                "read of '" + expr.name + "'");
        }
        return Type{var.type.mapping_value};
      }
      case ExprKind::kBinary:
        return CheckBinary(expr);
      case ExprKind::kUnary:
        return CheckUnary(expr);
      case ExprKind::kCall:
        return CheckCall(expr);
    }
    return std::nullopt;
  }

  std::optional<Type> CheckBinary(Expr& expr) {
    std::optional<Type> lhs = CheckExpr(expr.operands[0]);
    std::optional<Type> rhs = CheckExpr(expr.operands[1]);
    if (!lhs || !rhs) {
      return std::nullopt;
    }
    std::string op = BinaryOpSpelling(expr.binary_op);
    auto mismatch = [&]() -> std::optional<Type> {
      Error(DiagnosticCode::kTypeMismatch,
            "operator '" + op + "' not applicable to " + TypeName(*lhs) +
                " and " + TypeName(*rhs),
            expr.span);
      return std::nullopt;
    };
    switch (expr.binary_op) {
      case BinaryOp::kAdd:
      case BinaryOp::kSub:
      case BinaryOp::kMul:
      case BinaryOp::kDiv:
      case BinaryOp::kMod:
        if (*lhs != Type::Uint() || *rhs != Type::Uint()) return mismatch();
        return Type::Uint();
      case BinaryOp::kLt:
      case BinaryOp::kLe:
      case BinaryOp::kGt:
      case BinaryOp::kGe:
        if (*lhs != Type::Uint() || *rhs != Type::Uint()) return mismatch();
        return Type::Bool();
      case BinaryOp::kEq:
      case BinaryOp::kNe:
        if (*lhs != *rhs || lhs->kind == TypeKind::kString) return mismatch();
        return Type::Bool();
      case BinaryOp::kAnd:
      case BinaryOp::kOr:
        if (*lhs != Type::Bool() || *rhs != Type::Bool()) return mismatch();
        return Type::Bool();
    }
    return std::nullopt;
  }

  std::optional<Type> CheckUnary(Expr& expr) {
    Expr& operand = expr.operands[0];
    if (expr.unary_op == UnaryOp::kPostInc || expr.unary_op == UnaryOp::kPostDec) {
      std::optional<Type> type = CheckLValue(operand);
      if (type && operand.binding.kind == BindingKind::kStateVar) {
        // The old value is read as well as written.
        Touch(&Effects::reads_state, operand.span,
              "read of '" + operand.name + "'");
      }
      ExpectType(type, Type::Uint(), operand.span,
                 std::string("operand of '") + UnaryOpSpelling(expr.unary_op) +
                     "'");
      return type && *type == Type::Uint() ? type : std::nullopt;
    }
    std::optional<Type> type = CheckExpr(operand);
    if (!type) {
      return std::nullopt;
    }
    Type expected = expr.unary_op == UnaryOp::kNeg ? Type::Uint() : Type::Bool();
    if (*type != expected) {
      Error(DiagnosticCode::kTypeMismatch,
            std::string("operator '") + UnaryOpSpelling(expr.unary_op) +
                "' not applicable to " + TypeName(*type),
            expr.span);
      return std::nullopt;
    }
    return expected;
  }

  std::optional<Type> CheckCall(Expr& expr) {
    std::vector<std::optional<Type>> arg_types;
    for (Expr& arg : expr.operands) {
      arg_types.push_back(CheckExpr(arg));
    }
    auto it = symbols_->function_index.find(expr.name);
    if (it == symbols_->function_index.end()) {
      Error(DiagnosticCode::kUnknownIdentifier,
            "unknown function '" + expr.name + "'", expr.span);
      return std::nullopt;
    }
    if (body_kind_ == BodyKind::kInitializer) {
      Error(DiagnosticCode::kInvalidContext,
            "state variable initializers cannot call functions", expr.span);
      return std::nullopt;
    }
    const FunctionDecl& callee = contract_->functions[it->second];
    if (callee.visibility == Visibility::kExternal) {
      Error(DiagnosticCode::kVisibilityViolation,
            "external function '" + expr.name + "' cannot be called internally",
            expr.span);
      return std::nullopt;
    }
    if (callee.params.size() != expr.operands.size()) {
      Error(DiagnosticCode::kArityMismatch,
            "function '" + expr.name + "' expects " +
                std::to_string(callee.params.size()) + " arguments",
            expr.span);
      return std::nullopt;
    }
    for (size_t i = 0; i < arg_types.size(); ++i) {
      ExpectType(arg_types[i], callee.params[i].type, expr.operands[i].span,
                 "argument " + std::to_string(i + 1) + " of '" + expr.name +
                     "'");
    }
    // A call inherits the callee's strongest effect class.
    switch (callee.mutability) {
      case Mutability::kPure:
        break;
      case Mutability::kView:
        Touch(&Effects::reads_state, expr.span,
              "call to view function '" + expr.name + "'");
        break;
      case Mutability::kPayable:
      case Mutability::kNonpayable:
        Touch(&Effects::writes_state, expr.span,
              "call to state-modifying function '" + expr.name + "'");
        break;
    }
    return callee.return_type.value_or(Type::Void());
  }

  CheckedUnit checked_;
  Diagnostics diagnostics_;

  ContractDecl* contract_ = nullptr;
  ContractSymbols* symbols_ = nullptr;
  std::vector<Effects> modifier_effects_;

  BodyKind body_kind_ = BodyKind::kFunction;
  Mutability mutability_ = Mutability::kNonpayable;
  Visibility visibility_ = Visibility::kPublic;
  std::optional<Type> return_type_;
  Effects effects_;
  std::vector<LocalInfo> frame_;
  std::vector<std::vector<std::pair<std::string, int>>> scopes_;
  int loop_depth_ = 0;
  int placeholders_ = 0;
};

}  // namespace

std::variant<CheckedUnit, Diagnostics> Check(const SourceUnit& unit) {
  return Checker(unit).Run();
}

}  // namespace mutforge
