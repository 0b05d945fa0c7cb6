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

#ifndef MUTFORGE_VM_WORLD_STATE_H_
#define MUTFORGE_VM_WORLD_STATE_H_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mutforge/compiler/bytecode.h"
#include "mutforge/compiler/value.h"
#include "nlohmann/json.hpp"

namespace mutforge {

// Balance granted to every externally owned account of a replay test.
inline constexpr uint64_t kDefaultAccountBalance = 1'000'000'000'000'000'000ULL;

// First address handed out to deployed contracts.
inline constexpr Address kFirstContractAddress = 0xc0de0001;

struct ContractAccount {
  std::shared_ptr<const Bytecode> code;
  // One value per storage slot; mapping slots hold a placeholder word.
  std::vector<Value> slots;
  // Mapping contents keyed by slot then key. Zero values are not stored.
  std::map<uint64_t, std::map<Address, Value>> mappings;
};

struct WorldState {
  std::map<Address, uint64_t> balances;
  std::map<Address, ContractAccount> contracts;
  Address next_contract = kFirstContractAddress;
  uint64_t timestamp = 0;

  uint64_t BalanceOf(Address address) const;
  const ContractAccount* FindContract(Address address) const;

  // Exact sum of all balances, which may exceed one word.
  unsigned __int128 TotalBalance() const;

  // Canonical JSON with sorted keys; equal states serialize identically.
  nlohmann::json ToJson() const;
  std::string Serialize() const;
};

}  // namespace mutforge

#endif  // MUTFORGE_VM_WORLD_STATE_H_
