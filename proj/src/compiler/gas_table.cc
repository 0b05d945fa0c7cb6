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

#include "mutforge/compiler/gas_table.h"

#include <stdexcept>

namespace mutforge {

const char* OpcodeName(Opcode op) {
  switch (op) {
    case Opcode::kDispatch: return "DISPATCH";
    case Opcode::kStop: return "STOP";
    case Opcode::kPush: return "PUSH";
    case Opcode::kPushConst: return "PUSHC";
    case Opcode::kPop: return "POP";
    case Opcode::kLoad: return "LOAD";
    case Opcode::kStore: return "STORE";
    case Opcode::kSLoad: return "SLOAD";
    case Opcode::kSStore: return "SSTORE";
    case Opcode::kMLoad: return "MLOAD";
    case Opcode::kMStore: return "MSTORE";
    case Opcode::kAdd: return "ADD";
    case Opcode::kSub: return "SUB";
    case Opcode::kMul: return "MUL";
    case Opcode::kDiv: return "DIV";
    case Opcode::kMod: return "MOD";
    case Opcode::kLt: return "LT";
    case Opcode::kLe: return "LE";
    case Opcode::kGt: return "GT";
    case Opcode::kGe: return "GE";
    case Opcode::kEq: return "EQ";
    case Opcode::kNe: return "NE";
    case Opcode::kNot: return "NOT";
    case Opcode::kNeg: return "NEG";
    case Opcode::kJump: return "JUMP";
    case Opcode::kJumpIfFalse: return "JUMPF";
    case Opcode::kJumpIfTrue: return "JUMPT";
    case Opcode::kCall: return "CALL";
    case Opcode::kRet: return "RET";
    case Opcode::kCaller: return "CALLER";
    case Opcode::kCallValue: return "CALLVALUE";
    case Opcode::kOrigin: return "ORIGIN";
    case Opcode::kTimestamp: return "TIMESTAMP";
    case Opcode::kEmit: return "EMIT";
    case Opcode::kRequire: return "REQUIRE";
    case Opcode::kAssert: return "ASSERT";
    case Opcode::kTransfer: return "TRANSFER";
  }
  return "?";
}

namespace {

GasTable BuildDefault() {
  GasTable table;
  table.version = "mutforge-gas-v1";
  auto set = [&table](Opcode op, uint64_t cost) {
    table.opcode_cost[static_cast<size_t>(op)] = cost;
  };
  // Control flow.
  set(Opcode::kDispatch, 8);
  set(Opcode::kStop, 1);
  set(Opcode::kJump, 8);
  set(Opcode::kJumpIfFalse, 8);
  set(Opcode::kJumpIfTrue, 8);
  set(Opcode::kCall, 8);
  set(Opcode::kRet, 8);
  // Stack and frame.
  set(Opcode::kPush, 3);
  set(Opcode::kPushConst, 3);
  set(Opcode::kPop, 3);
  set(Opcode::kLoad, 3);
  set(Opcode::kStore, 3);
  // Storage.
  set(Opcode::kSLoad, 200);
  set(Opcode::kMLoad, 200);
  set(Opcode::kSStore, 4);
  set(Opcode::kMStore, 4);
  // Arithmetic, comparison and logic.
  for (Opcode op : {Opcode::kAdd, Opcode::kSub, Opcode::kMul, Opcode::kDiv,
                    Opcode::kMod, Opcode::kLt, Opcode::kLe, Opcode::kGt,
                    Opcode::kGe, Opcode::kEq, Opcode::kNe, Opcode::kNot,
                    Opcode::kNeg}) {
    set(op, 3);
  }
  // Environment.
  set(Opcode::kCaller, 2);
  set(Opcode::kCallValue, 2);
  set(Opcode::kOrigin, 2);
  set(Opcode::kTimestamp, 2);
  // Effects.
  set(Opcode::kEmit, 375);
  set(Opcode::kRequire, 3);
  set(Opcode::kAssert, 3);
  set(Opcode::kTransfer, 2300);

  table.storage_write_zero = 4;
  table.storage_write_nonzero = 68;
  table.emit_per_word = 8;
  table.tx_base = 21000;
  table.code_deposit_per_instruction = 200;
  return table;
}

uint64_t PositiveField(const nlohmann::json& json, const char* key) {
  if (!json.contains(key) || !json.at(key).is_number_unsigned()) {
    throw std::invalid_argument(std::string("gas table lacks '") + key + "'");
  }
  uint64_t value = json.at(key).get<uint64_t>();
  if (value == 0) {
    throw std::invalid_argument(std::string("gas table entry '") + key +
                                "' must be positive");
  }
  return value;
}

}  // namespace

const GasTable& GasTable::Default() {
  static const GasTable table = BuildDefault();
  return table;
}

GasTable GasTable::FromJson(const nlohmann::json& json) {
  GasTable table;
  table.version = json.value("version", "");
  const nlohmann::json& opcodes = json.at("opcodes");
  for (size_t i = 0; i < kOpcodeCount; ++i) {
    table.opcode_cost[i] =
        PositiveField(opcodes, OpcodeName(static_cast<Opcode>(i)));
  }
  if (opcodes.size() != kOpcodeCount) {
    throw std::invalid_argument("gas table names unknown opcodes");
  }
  table.storage_write_zero = PositiveField(json, "storage_write_zero");
  table.storage_write_nonzero = PositiveField(json, "storage_write_nonzero");
  table.emit_per_word = PositiveField(json, "emit_per_word");
  table.tx_base = PositiveField(json, "tx_base");
  table.code_deposit_per_instruction =
      PositiveField(json, "code_deposit_per_instruction");
  return table;
}

nlohmann::json GasTable::ToJson() const {
  nlohmann::json opcodes = nlohmann::json::object();
  for (size_t i = 0; i < kOpcodeCount; ++i) {
    opcodes[OpcodeName(static_cast<Opcode>(i))] = opcode_cost[i];
  }
  return {
      {"version", version},
      {"opcodes", opcodes},
      {"storage_write_zero", storage_write_zero},
      {"storage_write_nonzero", storage_write_nonzero},
      {"emit_per_word", emit_per_word},
      {"tx_base", tx_base},
      {"code_deposit_per_instruction", code_deposit_per_instruction},
  };
}

}  // namespace mutforge
