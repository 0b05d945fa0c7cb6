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

#ifndef MUTFORGE_COMPILER_VALUE_H_
#define MUTFORGE_COMPILER_VALUE_H_

#include <cstdint>
#include <string>
#include <variant>

#include "nlohmann/json.hpp"

namespace mutforge {

// A runtime value. uint, bool and address are all 64-bit words; strings are
// the only non-word values.
using Value = std::variant<uint64_t, std::string>;

using Address = uint64_t;

inline bool IsZeroValue(const Value& value) {
  if (const auto* word = std::get_if<uint64_t>(&value)) return *word == 0;
  return std::get<std::string>(value).empty();
}

// Number of 8-byte storage words a value occupies (at least one).
inline uint64_t WordCount(const Value& value) {
  if (std::holds_alternative<uint64_t>(value)) return 1;
  uint64_t bytes = std::get<std::string>(value).size();
  return bytes == 0 ? 1 : (bytes + 7) / 8;
}

// Addresses render as 0x-prefixed, 40-digit lowercase hex.
std::string FormatAddress(Address address);
// Accepts "0x..." hex of up to 16 significant digits. Throws
// std::invalid_argument on malformed input.
Address ParseAddress(const std::string& text);

nlohmann::json ValueToJson(const Value& value);

}  // namespace mutforge

#endif  // MUTFORGE_COMPILER_VALUE_H_
