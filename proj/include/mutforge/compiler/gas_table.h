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

#ifndef MUTFORGE_COMPILER_GAS_TABLE_H_
#define MUTFORGE_COMPILER_GAS_TABLE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "nlohmann/json.hpp"

namespace mutforge {

enum class Opcode : uint8_t {
  kDispatch,
  kStop,
  kPush,
  kPushConst,
  kPop,
  kLoad,
  kStore,
  kSLoad,
  kSStore,
  kMLoad,
  kMStore,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kMod,
  kLt,
  kLe,
  kGt,
  kGe,
  kEq,
  kNe,
  kNot,
  kNeg,
  kJump,
  kJumpIfFalse,
  kJumpIfTrue,
  kCall,
  kRet,
  kCaller,
  kCallValue,
  kOrigin,
  kTimestamp,
  kEmit,
  kRequire,
  kAssert,
  kTransfer,
};

inline constexpr size_t kOpcodeCount = static_cast<size_t>(Opcode::kTransfer) + 1;

const char* OpcodeName(Opcode op);

// Gas prices. Storage writes are charged per 8-byte word: storage_write_zero
// when the stored value is zero/empty, storage_write_nonzero otherwise. Event
// emission costs emit_base plus emit_per_word for each payload word. The
// static cost of kSStore/kMStore is the zero-word price; the VM adds the
// difference for nonzero words.
struct GasTable {
  std::string version;
  std::array<uint64_t, kOpcodeCount> opcode_cost{};
  uint64_t storage_write_zero = 0;
  uint64_t storage_write_nonzero = 0;
  uint64_t emit_per_word = 0;
  uint64_t tx_base = 0;
  uint64_t code_deposit_per_instruction = 0;

  uint64_t Cost(Opcode op) const {
    return opcode_cost[static_cast<size_t>(op)];
  }

  // The frozen table shipped as data/gas_table_v1.json.
  static const GasTable& Default();

  // Throws std::invalid_argument when the table is not total over the opcode
  // set or a cost is zero.
  static GasTable FromJson(const nlohmann::json& json);
  nlohmann::json ToJson() const;
};

}  // namespace mutforge

#endif  // MUTFORGE_COMPILER_GAS_TABLE_H_
