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

#include "mutforge/compiler/compiler.h"

#include <algorithm>
#include <limits>
#include <map>

namespace mutforge {
namespace {

SlotKind KindOf(const Type& type) {
  if (type.kind == TypeKind::kString) return SlotKind::kString;
  if (type.kind == TypeKind::kMapping) return SlotKind::kMapping;
  return SlotKind::kWord;
}

Opcode ArithmeticOpcode(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return Opcode::kAdd;
    case BinaryOp::kSub: return Opcode::kSub;
    case BinaryOp::kMul: return Opcode::kMul;
    case BinaryOp::kDiv: return Opcode::kDiv;
    case BinaryOp::kMod: return Opcode::kMod;
    case BinaryOp::kLt: return Opcode::kLt;
    case BinaryOp::kLe: return Opcode::kLe;
    case BinaryOp::kGt: return Opcode::kGt;
    case BinaryOp::kGe: return Opcode::kGe;
    case BinaryOp::kEq: return Opcode::kEq;
    case BinaryOp::kNe: return Opcode::kNe;
    case BinaryOp::kAnd:
    case BinaryOp::kOr:
      break;
  }
  throw CompileError("logical operator has no direct opcode");
}

Opcode CompoundOpcode(AssignOp op) {
  switch (op) {
    case AssignOp::kAddAssign: return Opcode::kAdd;
    case AssignOp::kSubAssign: return Opcode::kSub;
    case AssignOp::kMulAssign: return Opcode::kMul;
    case AssignOp::kDivAssign: return Opcode::kDiv;
    case AssignOp::kAssign: break;
  }
  throw CompileError("plain assignment has no arithmetic opcode");
}

std::vector<TypeKind> ParamKinds(const std::vector<Parameter>& params) {
  std::vector<TypeKind> kinds;
  for (const Parameter& param : params) kinds.push_back(param.type.kind);
  return kinds;
}

// Where a `_` or `return` inside a body leads.
struct BodyContext {
  // Offset of this body's own slots in the combined frame.
  int frame_base = 0;
  // Label reached by `return`.
  int exit_label = -1;
  // Modifier position in the invocation chain; -1 for the function body.
  int modifier_position = -1;
};

struct LoopLabels {
  int continue_label;
  int break_label;
};

class ContractCompiler {
 public:
  ContractCompiler(const ContractDecl& contract, const ContractSymbols& symbols)
      : contract_(contract), symbols_(symbols) {}

  Bytecode Run() {
    Emit(Opcode::kDispatch);
    for (size_t i = 0; i < contract_.state_vars.size(); ++i) {
      const StateVarDecl& var = contract_.state_vars[i];
      if (var.is_constant) continue;
      storage_slot_[static_cast<int>(i)] =
          static_cast<uint64_t>(out_.storage.size());
      out_.storage.push_back(KindOf(var.type));
    }
    for (const EventDecl& event : contract_.events) {
      out_.events.push_back({event.name, ParamKinds(event.params)});
    }

    std::optional<size_t> constructor;
    for (size_t i = 0; i < contract_.functions.size(); ++i) {
      if (contract_.functions[i].is_constructor) constructor = i;
    }
    bool has_initializers = std::any_of(
        contract_.state_vars.begin(), contract_.state_vars.end(),
        [](const StateVarDecl& v) { return !v.is_constant && v.initializer; });

    out_.functions.resize(contract_.functions.size());
    for (size_t i = 0; i < contract_.functions.size(); ++i) {
      CompileFunction(i, constructor == i && has_initializers);
    }
    if (constructor) {
      const FunctionDecl& ctor = contract_.functions[*constructor];
      out_.init = InitEntry{static_cast<uint32_t>(*constructor),
                            ctor.mutability, ParamKinds(ctor.params)};
    } else if (has_initializers) {
      out_.init = InitEntry{CompileSyntheticInit(), Mutability::kNonpayable,
                            {}};
    }

    for (size_t i = 0; i < contract_.functions.size(); ++i) {
      const FunctionDecl& function = contract_.functions[i];
      if (function.is_constructor) continue;
      if (function.visibility != Visibility::kPublic &&
          function.visibility != Visibility::kExternal) {
        continue;
      }
      DispatchEntry entry;
      entry.selector = function.name;
      entry.function = static_cast<uint32_t>(i);
      entry.visibility = function.visibility;
      entry.mutability = function.mutability;
      entry.params = ParamKinds(function.params);
      entry.returns = function.return_type ? function.return_type->kind
                                           : TypeKind::kVoid;
      entry.modifier_entries = modifier_entries_[i];
      out_.dispatcher.push_back(std::move(entry));
    }
    std::sort(out_.dispatcher.begin(), out_.dispatcher.end(),
              [](const DispatchEntry& a, const DispatchEntry& b) {
                return a.selector < b.selector;
              });

    ResolveLabels();
    return std::move(out_);
  }

 private:
  // ---- emission ----

  void Emit(Opcode op, uint64_t operand = 0) {
    out_.instructions.push_back({op, operand});
  }

  int NewLabel() {
    labels_.push_back(-1);
    return static_cast<int>(labels_.size()) - 1;
  }

  void Bind(int label) { labels_[label] = static_cast<int64_t>(Here()); }

  void EmitJump(Opcode op, int label) {
    fixups_.push_back(out_.instructions.size());
    Emit(op, static_cast<uint64_t>(label));
  }

  uint32_t Here() const {
    return static_cast<uint32_t>(out_.instructions.size());
  }

  void ResolveLabels() {
    for (size_t at : fixups_) {
      Instruction& instruction = out_.instructions[at];
      int64_t target = labels_.at(instruction.operand);
      if (target < 0 ||
          static_cast<size_t>(target) >= out_.instructions.size()) {
        throw CompileError("jump to unbound or out-of-range label");
      }
      instruction.operand = static_cast<uint64_t>(target);
    }
  }

  uint64_t ConstantIndex(const Value& value) {
    auto it = std::find(out_.constants.begin(), out_.constants.end(), value);
    if (it != out_.constants.end()) {
      return static_cast<uint64_t>(it - out_.constants.begin());
    }
    out_.constants.push_back(value);
    return out_.constants.size() - 1;
  }

  uint64_t StorageSlot(const Binding& binding) const {
    auto it = storage_slot_.find(binding.index);
    if (binding.kind != BindingKind::kStateVar || it == storage_slot_.end()) {
      throw CompileError("expression is not bound to a storage slot");
    }
    return it->second;
  }

  uint64_t LocalSlot(const Binding& binding) const {
    if (binding.kind != BindingKind::kLocal || binding.index < 0) {
      throw CompileError("expression is not bound to a local slot");
    }
    return static_cast<uint64_t>(context_.frame_base + binding.index);
  }

  int AcquireTemp() {
    int slot = temp_base_ + temp_depth_++;
    temp_high_ = std::max(temp_high_, temp_depth_);
    return slot;
  }

  void ReleaseTemp() { --temp_depth_; }

  // ---- functions ----

  void CompileFunction(size_t index, bool with_initializers) {
    const FunctionDecl& function = contract_.functions[index];
    const std::vector<LocalInfo>& locals = symbols_.function_frames.at(index);

    FunctionEntry& entry = out_.functions[index];
    entry.entry = Here();
    entry.param_count = static_cast<uint32_t>(function.params.size());
    for (const LocalInfo& local : locals) entry.frame.push_back(KindOf(local.type));

    modifier_bases_.clear();
    modifier_ids_.clear();
    for (const ModifierInvocation& invocation : function.modifiers) {
      int id = symbols_.modifier_index.at(invocation.name);
      modifier_ids_.push_back(id);
      modifier_bases_.push_back(static_cast<int>(entry.frame.size()));
      for (const LocalInfo& local : symbols_.modifier_frames.at(id)) {
        entry.frame.push_back(KindOf(local.type));
      }
    }
    return_slot_ = -1;
    entry.returns_value = function.return_type.has_value();
    if (function.return_type) {
      return_slot_ = static_cast<int>(entry.frame.size());
      entry.frame.push_back(KindOf(*function.return_type));
    }
    temp_base_ = static_cast<int>(entry.frame.size());
    temp_depth_ = 0;
    temp_high_ = 0;
    function_ = &function;
    modifier_entries_[index].clear();
    current_function_ = index;

    if (with_initializers) EmitInitializers();
    int exit = NewLabel();
    ExpandChain(0, exit);
    Bind(exit);
    if (function.return_type) {
      Emit(Opcode::kLoad, static_cast<uint64_t>(return_slot_));
      Emit(Opcode::kRet, 1);
    } else {
      Emit(Opcode::kRet, 0);
    }
    for (int i = 0; i < temp_high_; ++i) entry.frame.push_back(SlotKind::kWord);
  }

  uint32_t CompileSyntheticInit() {
    FunctionEntry entry;
    entry.entry = Here();
    temp_base_ = 0;
    temp_depth_ = 0;
    temp_high_ = 0;
    EmitInitializers();
    Emit(Opcode::kRet, 0);
    for (int i = 0; i < temp_high_; ++i) entry.frame.push_back(SlotKind::kWord);
    out_.functions.push_back(std::move(entry));
    return static_cast<uint32_t>(out_.functions.size() - 1);
  }

  void EmitInitializers() {
    for (size_t i = 0; i < contract_.state_vars.size(); ++i) {
      const StateVarDecl& var = contract_.state_vars[i];
      if (var.is_constant || !var.initializer) continue;
      CompileExpr(*var.initializer);
      Emit(Opcode::kSStore, storage_slot_.at(static_cast<int>(i)));
    }
  }

  // Emits modifier `position` of the current function's chain, or the body
  // once the chain is exhausted. `exit` is where a `return` inside the
  // expanded body leads.
  void ExpandChain(size_t position, int exit) {
    BodyContext saved = context_;
    std::vector<LoopLabels> saved_loops;
    saved_loops.swap(loops_);
    if (position == function_->modifiers.size()) {
      context_ = {0, exit, -1};
      CompileBlock(function_->body);
    } else {
      const ModifierInvocation& invocation = function_->modifiers[position];
      int base = modifier_bases_[position];
      // Arguments are evaluated in the function's own scope.
      context_ = {0, exit, -1};
      for (const Expr& arg : invocation.args) CompileExpr(arg);
      for (size_t i = invocation.args.size(); i-- > 0;) {
        Emit(Opcode::kStore, static_cast<uint64_t>(base) + i);
      }
      if (modifier_entries_[current_function_].size() == position) {
        modifier_entries_[current_function_].push_back(Here());
      }
      int modifier_exit = NewLabel();
      context_ = {base, modifier_exit, static_cast<int>(position)};
      CompileBlock(contract_.modifiers[modifier_ids_[position]].body);
      Bind(modifier_exit);
    }
    context_ = saved;
    loops_.swap(saved_loops);
  }

  // ---- statements ----

  void CompileBlock(const std::vector<Stmt>& body) {
    for (const Stmt& stmt : body) CompileStmt(stmt);
  }

  void CompileStmt(const Stmt& stmt) {
    switch (stmt.kind) {
      case StmtKind::kVarDecl: {
        if (stmt.exprs.empty()) {
          if (stmt.decl_type.kind == TypeKind::kString) {
            Emit(Opcode::kPushConst, ConstantIndex(Value{std::string()}));
          } else {
            Emit(Opcode::kPush, 0);
          }
        } else {
          CompileExpr(stmt.exprs[0]);
        }
        if (stmt.local_slot < 0) throw CompileError("local without a slot");
        Emit(Opcode::kStore,
             static_cast<uint64_t>(context_.frame_base + stmt.local_slot));
        break;
      }
      case StmtKind::kAssign:
        CompileAssign(stmt);
        break;
      case StmtKind::kIf: {
        int else_label = NewLabel();
        int end_label = NewLabel();
        CompileExpr(stmt.exprs[0]);
        EmitJump(Opcode::kJumpIfFalse, else_label);
        CompileBlock(stmt.body);
        if (stmt.has_else) {
          EmitJump(Opcode::kJump, end_label);
          Bind(else_label);
          CompileBlock(stmt.else_body);
        } else {
          Bind(else_label);
        }
        Bind(end_label);
        break;
      }
      case StmtKind::kWhile: {
        int start = NewLabel();
        int end = NewLabel();
        Bind(start);
        CompileExpr(stmt.exprs[0]);
        EmitJump(Opcode::kJumpIfFalse, end);
        loops_.push_back({start, end});
        CompileBlock(stmt.body);
        loops_.pop_back();
        EmitJump(Opcode::kJump, start);
        Bind(end);
        break;
      }
      case StmtKind::kReturn:
        if (!stmt.exprs.empty()) {
          if (return_slot_ < 0) throw CompileError("return value in void body");
          CompileExpr(stmt.exprs[0]);
          Emit(Opcode::kStore, static_cast<uint64_t>(return_slot_));
        }
        EmitJump(Opcode::kJump, context_.exit_label);
        break;
      case StmtKind::kBreak:
      case StmtKind::kContinue:
        if (loops_.empty()) throw CompileError("jump statement outside loop");
        EmitJump(Opcode::kJump, stmt.kind == StmtKind::kBreak
                                    ? loops_.back().break_label
                                    : loops_.back().continue_label);
        break;
      case StmtKind::kExpr:
        CompileExpr(stmt.exprs[0]);
        if (stmt.exprs[0].type.kind != TypeKind::kVoid) Emit(Opcode::kPop);
        break;
      case StmtKind::kEmit:
        for (const Expr& arg : stmt.exprs) CompileExpr(arg);
        Emit(Opcode::kEmit,
             static_cast<uint64_t>(symbols_.event_index.at(stmt.name)));
        break;
      case StmtKind::kRequire:
        for (const Expr& arg : stmt.exprs) CompileExpr(arg);
        Emit(Opcode::kRequire, stmt.exprs.size() > 1 ? 1 : 0);
        break;
      case StmtKind::kAssert:
        CompileExpr(stmt.exprs[0]);
        Emit(Opcode::kAssert);
        break;
      case StmtKind::kTransfer:
        CompileExpr(stmt.exprs[0]);
        CompileExpr(stmt.exprs[1]);
        Emit(Opcode::kTransfer);
        break;
      case StmtKind::kPlaceholder: {
        if (context_.modifier_position < 0) {
          throw CompileError("placeholder outside a modifier");
        }
        int after = NewLabel();
        ExpandChain(static_cast<size_t>(context_.modifier_position) + 1, after);
        Bind(after);
        break;
      }
    }
  }

  void CompileAssign(const Stmt& stmt) {
    const Expr& target = stmt.exprs[0];
    const Expr& value = stmt.exprs[1];
    bool compound = stmt.assign_op != AssignOp::kAssign;
    if (target.kind == ExprKind::kIndex) {
      uint64_t slot = StorageSlot(target.binding);
      if (!compound) {
        CompileExpr(target.operands[0]);
        CompileExpr(value);
        Emit(Opcode::kMStore, slot);
        return;
      }
      int temp = AcquireTemp();
      CompileExpr(target.operands[0]);
      Emit(Opcode::kStore, static_cast<uint64_t>(temp));
      Emit(Opcode::kLoad, static_cast<uint64_t>(temp));
      Emit(Opcode::kLoad, static_cast<uint64_t>(temp));
      Emit(Opcode::kMLoad, slot);
      CompileExpr(value);
      Emit(CompoundOpcode(stmt.assign_op));
      Emit(Opcode::kMStore, slot);
      ReleaseTemp();
      return;
    }
    if (target.kind != ExprKind::kIdentifier) {
      throw CompileError("assignment target is not an lvalue");
    }
    if (compound) EmitRead(target);
    CompileExpr(value);
    if (compound) Emit(CompoundOpcode(stmt.assign_op));
    EmitWrite(target);
  }

  void EmitRead(const Expr& identifier) {
    if (identifier.binding.kind == BindingKind::kLocal) {
      Emit(Opcode::kLoad, LocalSlot(identifier.binding));
    } else {
      Emit(Opcode::kSLoad, StorageSlot(identifier.binding));
    }
  }

  void EmitWrite(const Expr& identifier) {
    if (identifier.binding.kind == BindingKind::kLocal) {
      Emit(Opcode::kStore, LocalSlot(identifier.binding));
    } else {
      Emit(Opcode::kSStore, StorageSlot(identifier.binding));
    }
  }

  // ---- expressions ----

  void CompileExpr(const Expr& expr) {
    switch (expr.kind) {
      case ExprKind::kIntLiteral:
      case ExprKind::kBoolLiteral:
        Emit(Opcode::kPush, expr.int_value);
        return;
      case ExprKind::kAddressLiteral:
        Emit(Opcode::kPushConst, ConstantIndex(Value{expr.int_value}));
        return;
      case ExprKind::kStringLiteral:
        Emit(Opcode::kPushConst, ConstantIndex(Value{expr.string_value}));
        return;
      case ExprKind::kIdentifier:
        if (expr.binding.kind == BindingKind::kConstant) {
          const StateVarDecl& var = contract_.state_vars.at(
              static_cast<size_t>(expr.binding.index));
          if (!var.initializer) throw CompileError("constant without value");
          CompileExpr(*var.initializer);
          return;
        }
        EmitRead(expr);
        return;
      case ExprKind::kBuiltin:
        switch (expr.builtin) {
          case Builtin::kMsgSender:
            Emit(Opcode::kCaller);
            return;
          case Builtin::kMsgValue:
            Emit(Opcode::kCallValue);
            return;
          case Builtin::kTxOrigin:
            Emit(Opcode::kOrigin);
            return;
          case Builtin::kBlockTimestamp:
            Emit(Opcode::kTimestamp);
            return;
        }
        return;
      case ExprKind::kIndex:
        CompileExpr(expr.operands[0]);
        Emit(Opcode::kMLoad, StorageSlot(expr.binding));
        return;
      case ExprKind::kCall: {
        for (const Expr& arg : expr.operands) CompileExpr(arg);
        Emit(Opcode::kCall,
             static_cast<uint64_t>(symbols_.function_index.at(expr.name)));
        return;
      }
      case ExprKind::kBinary:
        CompileBinary(expr);
        return;
      case ExprKind::kUnary:
        CompileUnary(expr);
        return;
    }
  }

  void CompileBinary(const Expr& expr) {
    if (expr.binary_op == BinaryOp::kAnd || expr.binary_op == BinaryOp::kOr) {
      bool is_and = expr.binary_op == BinaryOp::kAnd;
      int short_label = NewLabel();
      int end_label = NewLabel();
      CompileExpr(expr.operands[0]);
      EmitJump(is_and ? Opcode::kJumpIfFalse : Opcode::kJumpIfTrue,
               short_label);
      CompileExpr(expr.operands[1]);
      EmitJump(Opcode::kJump, end_label);
      Bind(short_label);
      Emit(Opcode::kPush, is_and ? 0 : 1);
      Bind(end_label);
      return;
    }
    CompileExpr(expr.operands[0]);
    CompileExpr(expr.operands[1]);
    Emit(ArithmeticOpcode(expr.binary_op));
  }

  void CompileUnary(const Expr& expr) {
    const Expr& operand = expr.operands[0];
    if (expr.unary_op == UnaryOp::kNeg || expr.unary_op == UnaryOp::kNot) {
      CompileExpr(operand);
      Emit(expr.unary_op == UnaryOp::kNeg ? Opcode::kNeg : Opcode::kNot);
      return;
    }
    Opcode step = expr.unary_op == UnaryOp::kPostInc ? Opcode::kAdd
                                                      : Opcode::kSub;
    // Leaves the old value on the stack.
    if (operand.kind == ExprKind::kIndex) {
      uint64_t slot = StorageSlot(operand.binding);
      int temp = AcquireTemp();
      CompileExpr(operand.operands[0]);
      Emit(Opcode::kStore, static_cast<uint64_t>(temp));
      Emit(Opcode::kLoad, static_cast<uint64_t>(temp));
      Emit(Opcode::kMLoad, slot);
      Emit(Opcode::kLoad, static_cast<uint64_t>(temp));
      Emit(Opcode::kLoad, static_cast<uint64_t>(temp));
      Emit(Opcode::kMLoad, slot);
      Emit(Opcode::kPush, 1);
      Emit(step);
      Emit(Opcode::kMStore, slot);
      ReleaseTemp();
      return;
    }
    if (operand.kind != ExprKind::kIdentifier) {
      throw CompileError("increment operand is not an lvalue");
    }
    EmitRead(operand);
    EmitRead(operand);
    Emit(Opcode::kPush, 1);
    Emit(step);
    EmitWrite(operand);
  }

  const ContractDecl& contract_;
  const ContractSymbols& symbols_;
  Bytecode out_;

  std::map<int, uint64_t> storage_slot_;
  std::vector<int64_t> labels_;
  std::vector<size_t> fixups_;
  std::map<size_t, std::vector<uint32_t>> modifier_entries_;

  const FunctionDecl* function_ = nullptr;
  size_t current_function_ = 0;
  std::vector<int> modifier_bases_;
  std::vector<int> modifier_ids_;
  int return_slot_ = -1;
  int temp_base_ = 0;
  int temp_depth_ = 0;
  int temp_high_ = 0;
  BodyContext context_;
  std::vector<LoopLabels> loops_;
};

}  // namespace

Bytecode Compile(const CheckedUnit& unit, size_t contract_index) {
  if (contract_index >= unit.unit.contracts.size() ||
      contract_index >= unit.contracts.size()) {
    throw CompileError("contract index out of range");
  }
  return ContractCompiler(unit.unit.contracts[contract_index],
                          unit.contracts[contract_index])
      .Run();
}

}  // namespace mutforge
