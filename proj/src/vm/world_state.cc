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

#include "mutforge/vm/world_state.h"

namespace mutforge {

uint64_t WorldState::BalanceOf(Address address) const {
  auto it = balances.find(address);
  return it == balances.end() ? 0 : it->second;
}

const ContractAccount* WorldState::FindContract(Address address) const {
  auto it = contracts.find(address);
  return it == contracts.end() ? nullptr : &it->second;
}

unsigned __int128 WorldState::TotalBalance() const {
  unsigned __int128 total = 0;
  for (const auto& [address, balance] : balances) total += balance;
  return total;
}

nlohmann::json WorldState::ToJson() const {
  nlohmann::json accounts = nlohmann::json::object();
  for (const auto& [address, balance] : balances) {
    accounts[FormatAddress(address)] = balance;
  }
  nlohmann::json code = nlohmann::json::object();
  for (const auto& [address, account] : contracts) {
    nlohmann::json slots = nlohmann::json::array();
    for (const Value& value : account.slots) slots.push_back(ValueToJson(value));
    nlohmann::json mappings = nlohmann::json::object();
    for (const auto& [slot, entries] : account.mappings) {
      nlohmann::json contents = nlohmann::json::object();
      for (const auto& [key, value] : entries) {
        contents[FormatAddress(key)] = ValueToJson(value);
      }
      mappings[std::to_string(slot)] = contents;
    }
    code[FormatAddress(address)] = {
        {"fingerprint", account.code ? DigestHex(Fingerprint(*account.code))
                                     : std::string()},
        {"slots", slots},
        {"mappings", mappings}};
  }
  return {{"balances", accounts},
          {"contracts", code},
          {"next_contract", FormatAddress(next_contract)},
          {"timestamp", timestamp}};
}

std::string WorldState::Serialize() const { return ToJson().dump(); }

}  // namespace mutforge
