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

#ifndef MUTFORGE_VM_VM_H_
#define MUTFORGE_VM_VM_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mutforge/compiler/bytecode.h"
#include "mutforge/compiler/gas_table.h"
#include "mutforge/compiler/value.h"
#include "mutforge/vm/world_state.h"
#include "nlohmann/json.hpp"

namespace mutforge {

inline constexpr size_t kMaxCallDepth = 1024;

// Gas cap for pure calls; only there to stop runaway loops.
inline constexpr uint64_t kPureCallGasCap = 10'000'000;

struct Transaction {
  Address sender = 0;
  // Absent for a deployment.
  std::optional<Address> to;
  std::string method;
  std::vector<Value> args;
  uint64_t value = 0;
  uint64_t timestamp = 0;
  uint64_t gas_limit = 0;
};

enum class TxStatus { kSuccess, kFailed, kOutOfGas };

const char* TxStatusName(TxStatus status);

enum class FailureCode {
  kNone,
  kRequire,
  kAssert,
  kDivisionByZero,
  kUnknownSelector,
  kNonPayable,
  kInsufficientBalance,
  kBalanceOverflow,
  kCallDepth,
  kNoContract,
  kBadArguments,
  kStaticViolation,
  kOutOfGas,
};

const char* FailureCodeName(FailureCode code);

struct EventRecord {
  std::string name;
  std::vector<Value> args;
  bool operator==(const EventRecord&) const = default;
};

nlohmann::json EventToJson(const EventRecord& event);

struct TxOutcome {
  TxStatus status = TxStatus::kSuccess;
  FailureCode failure = FailureCode::kNone;
  std::string revert_reason;
  uint64_t gas_used = 0;
  std::vector<EventRecord> events;
  std::optional<Value> return_value;
  // Sorted distinct instruction indices executed.
  std::vector<uint32_t> trace;
  // Set by a successful deployment.
  std::optional<Address> deployed;

  nlohmann::json ToJson() const;
};

// Result of a pure or view call. A revert is a distinguished value.
struct PureResult {
  bool reverted = false;
  std::optional<Value> value;
  bool operator==(const PureResult&) const = default;

  static PureResult Reverted() { return {true, std::nullopt}; }
  nlohmann::json ToJson() const;
};

// Creates a contract at the next deterministic address. On failure the world
// is left unchanged.
TxOutcome Deploy(WorldState& world, std::shared_ptr<const Bytecode> code,
                 const Transaction& tx,
                 const GasTable& gas = GasTable::Default());

// Runs a call transaction. Failed and out-of-gas transactions leave the world
// unchanged.
TxOutcome ExecuteTx(WorldState& world, const Transaction& tx,
                    const GasTable& gas = GasTable::Default());

// Calls a method without modifying the world or charging any budget. Any
// failure, including a missing or state-changing method, reverts.
PureResult CallPure(const WorldState& world, Address contract,
                    const std::string& method, const std::vector<Value>& args,
                    Address caller,
                    const GasTable& gas = GasTable::Default());

}  // namespace mutforge

#endif  // MUTFORGE_VM_VM_H_
