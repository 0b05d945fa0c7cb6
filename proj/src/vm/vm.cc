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

#include "mutforge/vm/vm.h"

#include <limits>
#include <stdexcept>
#include <utility>

namespace mutforge {

const char* TxStatusName(TxStatus status) {
  switch (status) {
    case TxStatus::kSuccess:
      return "success";
    case TxStatus::kFailed:
      return "failed";
    case TxStatus::kOutOfGas:
      return "out-of-gas";
  }
  return "?";
}

const char* FailureCodeName(FailureCode code) {
  switch (code) {
    case FailureCode::kNone: return "none";
    case FailureCode::kRequire: return "require";
    case FailureCode::kAssert: return "assert";
    case FailureCode::kDivisionByZero: return "division-by-zero";
    case FailureCode::kUnknownSelector: return "unknown-selector";
    case FailureCode::kNonPayable: return "non-payable";
    case FailureCode::kInsufficientBalance: return "insufficient-balance";
    case FailureCode::kBalanceOverflow: return "balance-overflow";
    case FailureCode::kCallDepth: return "call-depth";
    case FailureCode::kNoContract: return "no-contract";
    case FailureCode::kBadArguments: return "bad-arguments";
    case FailureCode::kStaticViolation: return "static-violation";
    case FailureCode::kOutOfGas: return "out-of-gas";
  }
  return "?";
}

nlohmann::json EventToJson(const EventRecord& event) {
  nlohmann::json args = nlohmann::json::array();
  for (const Value& value : event.args) args.push_back(ValueToJson(value));
  return {{"name", event.name}, {"args", args}};
}

nlohmann::json TxOutcome::ToJson() const {
  nlohmann::json listed = nlohmann::json::array();
  for (const EventRecord& event : events) listed.push_back(EventToJson(event));
  nlohmann::json json = {{"status", TxStatusName(status)},
                         {"failure", FailureCodeName(failure)},
                         {"gas_used", gas_used},
                         {"events", listed}};
  if (!revert_reason.empty()) json["revert_reason"] = revert_reason;
  if (return_value) json["return"] = ValueToJson(*return_value);
  if (deployed) json["address"] = FormatAddress(*deployed);
  return json;
}

nlohmann::json PureResult::ToJson() const {
  if (reverted) return {{"reverted", true}};
  if (!value) return {{"reverted", false}};
  return {{"reverted", false}, {"value", ValueToJson(*value)}};
}

namespace {

struct Halt {
  FailureCode code;
  std::string reason;
};

struct OutOfGas {};

struct Frame {
  uint32_t function = 0;
  std::vector<Value> slots;
  uint32_t return_pc = 0;
  Address caller = 0;
  uint64_t value = 0;
};

struct CallContext {
  Address self = 0;
  Address origin = 0;
  uint64_t timestamp = 0;
  uint64_t gas_limit = 0;
  uint64_t gas_used = 0;
  // Null for a read-only call.
  WorldState* writable = nullptr;
};

std::vector<Value> DefaultSlots(const std::vector<SlotKind>& kinds) {
  std::vector<Value> slots;
  slots.reserve(kinds.size());
  for (SlotKind kind : kinds) {
    if (kind == SlotKind::kString) {
      slots.emplace_back(std::string());
    } else {
      slots.emplace_back(uint64_t{0});
    }
  }
  return slots;
}

bool ArgumentsMatch(const std::vector<Value>& args,
                    const std::vector<TypeKind>& params) {
  if (args.size() != params.size()) return false;
  for (size_t i = 0; i < args.size(); ++i) {
    bool is_word = std::holds_alternative<uint64_t>(args[i]);
    switch (params[i]) {
      case TypeKind::kUint:
      case TypeKind::kAddress:
        if (!is_word) return false;
        break;
      case TypeKind::kBool:
        if (!is_word || std::get<uint64_t>(args[i]) > 1) return false;
        break;
      case TypeKind::kString:
        if (is_word) return false;
        break;
      default:
        return false;
    }
  }
  return true;
}

class Interpreter {
 public:
  Interpreter(const WorldState& world, const Bytecode& code,
              const GasTable& gas, CallContext context)
      : world_(world),
        code_(code),
        gas_(gas),
        context_(context),
        seen_(code.instructions.size(), false) {}

  // Enters `function` through the dispatch instruction. Throws Halt or
  // OutOfGas on abnormal termination.
  std::optional<Value> Run(uint32_t function, const std::vector<Value>& args,
                           Address caller, uint64_t value) {
    Frame frame;
    frame.function = function;
    frame.slots = DefaultSlots(code_.functions.at(function).frame);
    for (size_t i = 0; i < args.size(); ++i) frame.slots.at(i) = args[i];
    frame.caller = caller;
    frame.value = value;
    frames_.push_back(std::move(frame));
    return Loop();
  }

  uint64_t gas_used() const { return context_.gas_used; }
  std::vector<EventRecord>& events() { return events_; }

  std::vector<uint32_t> Trace() const {
    std::vector<uint32_t> trace;
    for (size_t i = 0; i < seen_.size(); ++i) {
      if (seen_[i]) trace.push_back(static_cast<uint32_t>(i));
    }
    return trace;
  }

 private:
  void Charge(uint64_t cost) {
    if (cost > context_.gas_limit - context_.gas_used) throw OutOfGas{};
    context_.gas_used += cost;
  }

  Value Pop() {
    if (stack_.empty()) throw std::logic_error("operand stack underflow");
    Value value = std::move(stack_.back());
    stack_.pop_back();
    return value;
  }

  uint64_t PopWord() {
    Value value = Pop();
    if (!std::holds_alternative<uint64_t>(value)) {
      throw std::logic_error("expected a word operand");
    }
    return std::get<uint64_t>(value);
  }

  void Push(Value value) { stack_.push_back(std::move(value)); }
  void PushWord(uint64_t word) { stack_.emplace_back(word); }

  WorldState& Writable() {
    if (context_.writable == nullptr) {
      throw Halt{FailureCode::kStaticViolation, "state change in a pure call"};
    }
    return *context_.writable;
  }

  const ContractAccount& Self() const {
    return world_.contracts.at(context_.self);
  }

  void ChargeStorageWrite(const Value& value) {
    uint64_t per_word = IsZeroValue(value) ? gas_.storage_write_zero
                                           : gas_.storage_write_nonzero;
    Charge(per_word * WordCount(value));
  }

  std::optional<Value> Loop() {
    uint32_t pc = 0;
    for (;;) {
      if (pc >= code_.instructions.size()) {
        throw std::logic_error("program counter out of range");
      }
      const Instruction& ins = code_.instructions[pc];
      Charge(gas_.Cost(ins.op));
      seen_[pc] = true;
      uint32_t next = pc + 1;
      switch (ins.op) {
        case Opcode::kDispatch:
          next = code_.functions.at(frames_.back().function).entry;
          break;
        case Opcode::kStop:
          return std::nullopt;
        case Opcode::kPush:
          PushWord(ins.operand);
          break;
        case Opcode::kPushConst:
          Push(code_.constants.at(ins.operand));
          break;
        case Opcode::kPop:
          Pop();
          break;
        case Opcode::kLoad:
          Push(frames_.back().slots.at(ins.operand));
          break;
        case Opcode::kStore:
          frames_.back().slots.at(ins.operand) = Pop();
          break;
        case Opcode::kSLoad:
          Push(Self().slots.at(ins.operand));
          break;
        case Opcode::kSStore: {
          Value value = Pop();
          WorldState& world = Writable();
          ChargeStorageWrite(value);
          world.contracts.at(context_.self).slots.at(ins.operand) =
              std::move(value);
          break;
        }
        case Opcode::kMLoad: {
          Address key = PopWord();
          const auto& mappings = Self().mappings;
          auto slot = mappings.find(ins.operand);
          if (slot != mappings.end()) {
            auto entry = slot->second.find(key);
            if (entry != slot->second.end()) {
              Push(entry->second);
              break;
            }
          }
          PushWord(0);
          break;
        }
        case Opcode::kMStore: {
          Value value = Pop();
          Address key = PopWord();
          WorldState& world = Writable();
          ChargeStorageWrite(value);
          auto& mappings = world.contracts.at(context_.self).mappings;
          if (IsZeroValue(value)) {
            auto slot = mappings.find(ins.operand);
            if (slot != mappings.end()) {
              slot->second.erase(key);
              if (slot->second.empty()) mappings.erase(slot);
            }
          } else {
            mappings[ins.operand][key] = std::move(value);
          }
          break;
        }
        case Opcode::kAdd:
        case Opcode::kSub:
        case Opcode::kMul:
        case Opcode::kDiv:
        case Opcode::kMod:
        case Opcode::kLt:
        case Opcode::kLe:
        case Opcode::kGt:
        case Opcode::kGe: {
          uint64_t b = PopWord();
          uint64_t a = PopWord();
          PushWord(Arithmetic(ins.op, a, b));
          break;
        }
        case Opcode::kEq:
        case Opcode::kNe: {
          Value b = Pop();
          Value a = Pop();
          PushWord((a == b) == (ins.op == Opcode::kEq) ? 1 : 0);
          break;
        }
        case Opcode::kNot:
          PushWord(PopWord() == 0 ? 1 : 0);
          break;
        case Opcode::kNeg:
          PushWord(uint64_t{0} - PopWord());
          break;
        case Opcode::kJump:
          next = static_cast<uint32_t>(ins.operand);
          break;
        case Opcode::kJumpIfFalse:
          if (PopWord() == 0) next = static_cast<uint32_t>(ins.operand);
          break;
        case Opcode::kJumpIfTrue:
          if (PopWord() != 0) next = static_cast<uint32_t>(ins.operand);
          break;
        case Opcode::kCall: {
          if (frames_.size() >= kMaxCallDepth) {
            throw Halt{FailureCode::kCallDepth, "call depth exceeded"};
          }
          const FunctionEntry& callee = code_.functions.at(ins.operand);
          Frame frame;
          frame.function = static_cast<uint32_t>(ins.operand);
          frame.slots = DefaultSlots(callee.frame);
          for (size_t i = callee.param_count; i-- > 0;) {
            frame.slots.at(i) = Pop();
          }
          frame.return_pc = next;
          // An internal call is a message from the contract itself.
          frame.caller = context_.self;
          frame.value = 0;
          frames_.push_back(std::move(frame));
          next = callee.entry;
          break;
        }
        case Opcode::kRet: {
          std::optional<Value> result;
          if (ins.operand != 0) result = Pop();
          uint32_t return_pc = frames_.back().return_pc;
          frames_.pop_back();
          if (frames_.empty()) return result;
          if (result) Push(std::move(*result));
          next = return_pc;
          break;
        }
        case Opcode::kCaller:
          PushWord(frames_.back().caller);
          break;
        case Opcode::kCallValue:
          PushWord(frames_.back().value);
          break;
        case Opcode::kOrigin:
          PushWord(context_.origin);
          break;
        case Opcode::kTimestamp:
          PushWord(context_.timestamp);
          break;
        case Opcode::kEmit: {
          const EventEntry& event = code_.events.at(ins.operand);
          EventRecord record;
          record.name = event.name;
          record.args.resize(event.params.size());
          uint64_t words = 0;
          for (size_t i = event.params.size(); i-- > 0;) {
            record.args[i] = Pop();
            words += WordCount(record.args[i]);
          }
          Writable();
          Charge(gas_.emit_per_word * words);
          events_.push_back(std::move(record));
          break;
        }
        case Opcode::kRequire: {
          std::string message;
          if (ins.operand != 0) message = std::get<std::string>(Pop());
          if (PopWord() == 0) throw Halt{FailureCode::kRequire, message};
          break;
        }
        case Opcode::kAssert:
          if (PopWord() == 0) throw Halt{FailureCode::kAssert, ""};
          break;
        case Opcode::kTransfer: {
          uint64_t amount = PopWord();
          Address recipient = PopWord();
          WorldState& world = Writable();
          uint64_t& source = world.balances[context_.self];
          if (source < amount) {
            throw Halt{FailureCode::kInsufficientBalance,
                       "contract balance too low"};
          }
          source -= amount;
          uint64_t& target = world.balances[recipient];
          if (target > std::numeric_limits<uint64_t>::max() - amount) {
            throw Halt{FailureCode::kBalanceOverflow, "recipient overflow"};
          }
          target += amount;
          break;
        }
      }
      pc = next;
    }
  }

  static uint64_t Arithmetic(Opcode op, uint64_t a, uint64_t b) {
    switch (op) {
      case Opcode::kAdd: return a + b;
      case Opcode::kSub: return a - b;
      case Opcode::kMul: return a * b;
      case Opcode::kDiv:
        if (b == 0) throw Halt{FailureCode::kDivisionByZero, ""};
        return a / b;
      case Opcode::kMod:
        if (b == 0) throw Halt{FailureCode::kDivisionByZero, ""};
        return a % b;
      case Opcode::kLt: return a < b ? 1 : 0;
      case Opcode::kLe: return a <= b ? 1 : 0;
      case Opcode::kGt: return a > b ? 1 : 0;
      case Opcode::kGe: return a >= b ? 1 : 0;
      default:
        throw std::logic_error("not an arithmetic opcode");
    }
  }

  const WorldState& world_;
  const Bytecode& code_;
  const GasTable& gas_;
  CallContext context_;
  std::vector<bool> seen_;
  std::vector<Frame> frames_;
  std::vector<Value> stack_;
  std::vector<EventRecord> events_;
};

TxOutcome Failed(FailureCode code, uint64_t gas_used, std::string reason = "") {
  TxOutcome outcome;
  outcome.status = TxStatus::kFailed;
  outcome.failure = code;
  outcome.gas_used = gas_used;
  outcome.revert_reason = std::move(reason);
  return outcome;
}

TxOutcome OutOfGasOutcome(uint64_t gas_limit) {
  TxOutcome outcome;
  outcome.status = TxStatus::kOutOfGas;
  outcome.failure = FailureCode::kOutOfGas;
  outcome.gas_used = gas_limit;
  return outcome;
}

// Moves `amount` from `from` to `to`, returning a failure code on error.
FailureCode MoveValue(WorldState& world, Address from, Address to,
                      uint64_t amount) {
  if (amount == 0) return FailureCode::kNone;
  uint64_t& source = world.balances[from];
  if (source < amount) return FailureCode::kInsufficientBalance;
  uint64_t& target = world.balances[to];
  if (target > std::numeric_limits<uint64_t>::max() - amount) {
    return FailureCode::kBalanceOverflow;
  }
  source -= amount;
  target += amount;
  return FailureCode::kNone;
}

// Runs `function` of the contract at `self`, rolling the world back to
// `snapshot` on any abnormal end.
TxOutcome RunBody(WorldState& world, WorldState snapshot, const Bytecode& code,
                  const GasTable& gas, const Transaction& tx, Address self,
                  uint32_t function, uint64_t gas_used) {
  CallContext context;
  context.self = self;
  context.origin = tx.sender;
  context.timestamp = tx.timestamp;
  context.gas_limit = tx.gas_limit;
  context.gas_used = gas_used;
  context.writable = &world;
  Interpreter interpreter(world, code, gas, context);
  TxOutcome outcome;
  try {
    outcome.return_value =
        interpreter.Run(function, tx.args, tx.sender, tx.value);
    outcome.gas_used = interpreter.gas_used();
    outcome.events = std::move(interpreter.events());
  } catch (const Halt& halt) {
    world = std::move(snapshot);
    outcome = Failed(halt.code, interpreter.gas_used(), halt.reason);
  } catch (const OutOfGas&) {
    world = std::move(snapshot);
    outcome = OutOfGasOutcome(tx.gas_limit);
  }
  outcome.trace = interpreter.Trace();
  return outcome;
}

}  // namespace

TxOutcome Deploy(WorldState& world, std::shared_ptr<const Bytecode> code,
                 const Transaction& tx, const GasTable& gas) {
  if (tx.to) throw std::invalid_argument("deployment must not name a target");
  if (!code) throw std::invalid_argument("deployment without bytecode");
  uint64_t upfront = gas.tx_base;
  uint64_t deposit =
      gas.code_deposit_per_instruction * code->instructions.size();
  if (tx.gas_limit < upfront || deposit > tx.gas_limit - upfront) {
    return OutOfGasOutcome(tx.gas_limit);
  }
  upfront += deposit;

  const std::vector<TypeKind> no_params;
  const std::vector<TypeKind>& params =
      code->init ? code->init->params : no_params;
  if (!ArgumentsMatch(tx.args, params)) {
    return Failed(FailureCode::kBadArguments, upfront);
  }
  if (tx.value > 0 &&
      (!code->init || code->init->mutability != Mutability::kPayable)) {
    return Failed(FailureCode::kNonPayable, upfront);
  }

  WorldState snapshot = world;
  Address address = world.next_contract++;
  ContractAccount& account = world.contracts[address];
  account.code = code;
  account.slots = DefaultSlots(code->storage);
  world.balances.emplace(address, 0);
  if (FailureCode failure = MoveValue(world, tx.sender, address, tx.value);
      failure != FailureCode::kNone) {
    world = std::move(snapshot);
    return Failed(failure, upfront);
  }

  TxOutcome outcome;
  if (code->init) {
    outcome = RunBody(world, std::move(snapshot), *code, gas, tx, address,
                      code->init->function, upfront);
  } else {
    outcome.gas_used = upfront;
  }
  if (outcome.status == TxStatus::kSuccess) {
    outcome.deployed = address;
    world.timestamp = tx.timestamp;
  }
  return outcome;
}

TxOutcome ExecuteTx(WorldState& world, const Transaction& tx,
                    const GasTable& gas) {
  if (!tx.to) throw std::invalid_argument("call transaction without target");
  if (tx.gas_limit < gas.tx_base) return OutOfGasOutcome(tx.gas_limit);
  uint64_t upfront = gas.tx_base;
  const ContractAccount* account = world.FindContract(*tx.to);
  if (account == nullptr) return Failed(FailureCode::kNoContract, upfront);
  // Holding the code keeps it alive across a rollback of the world.
  std::shared_ptr<const Bytecode> code = account->code;
  const DispatchEntry* entry = code->FindSelector(tx.method);
  if (entry == nullptr) {
    return Failed(FailureCode::kUnknownSelector, upfront,
                  "no method '" + tx.method + "'");
  }
  if (!ArgumentsMatch(tx.args, entry->params)) {
    return Failed(FailureCode::kBadArguments, upfront);
  }
  if (tx.value > 0 && entry->mutability != Mutability::kPayable) {
    return Failed(FailureCode::kNonPayable, upfront);
  }
  WorldState snapshot = world;
  if (FailureCode failure = MoveValue(world, tx.sender, *tx.to, tx.value);
      failure != FailureCode::kNone) {
    world = std::move(snapshot);
    return Failed(failure, upfront);
  }
  TxOutcome outcome = RunBody(world, std::move(snapshot), *code, gas, tx,
                              *tx.to, entry->function, upfront);
  if (outcome.status == TxStatus::kSuccess) world.timestamp = tx.timestamp;
  return outcome;
}

PureResult CallPure(const WorldState& world, Address contract,
                    const std::string& method, const std::vector<Value>& args,
                    Address caller, const GasTable& gas) {
  const ContractAccount* account = world.FindContract(contract);
  if (account == nullptr) return PureResult::Reverted();
  const DispatchEntry* entry = account->code->FindSelector(method);
  if (entry == nullptr ||
      (entry->mutability != Mutability::kPure &&
       entry->mutability != Mutability::kView) ||
      !ArgumentsMatch(args, entry->params)) {
    return PureResult::Reverted();
  }
  CallContext context;
  context.self = contract;
  context.origin = caller;
  context.timestamp = world.timestamp;
  context.gas_limit = kPureCallGasCap;
  Interpreter interpreter(world, *account->code, gas, context);
  try {
    return PureResult{false, interpreter.Run(entry->function, args, caller, 0)};
  } catch (const Halt&) {
    return PureResult::Reverted();
  } catch (const OutOfGas&) {
    return PureResult::Reverted();
  }
}

}  // namespace mutforge
