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

#ifndef MUTFORGE_COMPILER_BYTECODE_H_
#define MUTFORGE_COMPILER_BYTECODE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mutforge/compiler/gas_table.h"
#include "mutforge/compiler/value.h"
#include "mutforge/frontend/ast.h"
#include "nlohmann/json.hpp"

namespace mutforge {

struct Instruction {
  Opcode op = Opcode::kStop;
  uint64_t operand = 0;
  bool operator==(const Instruction&) const = default;
};

// Storage slot / frame slot layout classes.
enum class SlotKind : uint8_t { kWord, kString, kMapping };

// A compiled function body, including its inlined modifier chain. Called by
// index from kCall and from the dispatcher.
struct FunctionEntry {
  uint32_t entry = 0;
  uint32_t param_count = 0;
  std::vector<SlotKind> frame;
  bool returns_value = false;
  bool operator==(const FunctionEntry&) const = default;
};

// One externally callable method. Only public and external functions get an
// entry; the visibility and mutability flags are part of the bytecode and
// therefore of its fingerprint.
struct DispatchEntry {
  std::string selector;
  uint32_t function = 0;
  Visibility visibility = Visibility::kPublic;
  Mutability mutability = Mutability::kNonpayable;
  std::vector<TypeKind> params;
  TypeKind returns = TypeKind::kVoid;
  // First instruction of each inlined modifier, in invocation order.
  std::vector<uint32_t> modifier_entries;
  bool operator==(const DispatchEntry&) const = default;
};

struct EventEntry {
  std::string name;
  std::vector<TypeKind> params;
  bool operator==(const EventEntry&) const = default;
};

// Deployment code: state variable initializers followed by the constructor.
struct InitEntry {
  uint32_t function = 0;
  Mutability mutability = Mutability::kNonpayable;
  std::vector<TypeKind> params;
  bool operator==(const InitEntry&) const = default;
};

struct Bytecode {
  std::vector<Instruction> instructions;
  std::vector<Value> constants;
  // Sorted by selector.
  std::vector<DispatchEntry> dispatcher;
  std::vector<FunctionEntry> functions;
  std::vector<SlotKind> storage;
  std::vector<EventEntry> events;
  std::optional<InitEntry> init;

  const DispatchEntry* FindSelector(std::string_view selector) const;

  // Canonical byte encoding. Equal encodings iff equal bytecode.
  std::string Serialize() const;

  // Debug listing: {instructions: [{index, opcode, operand, gas}], ...}.
  nlohmann::json ToJson(const GasTable& gas = GasTable::Default()) const;

  bool operator==(const Bytecode&) const = default;
};

using Digest = std::array<uint8_t, 32>;

// SHA-256 of Serialize(): covers instructions, the constant pool, the
// dispatcher table (with visibility and mutability flags), the function and
// event tables, the storage layout, and the deployment entry.
Digest Fingerprint(const Bytecode& bytecode);

std::string DigestHex(const Digest& digest);

// Fraction of distinct instruction indices in executed over the total
// instruction count. Throws std::out_of_range on an index past the end.
double Coverage(std::span<const uint32_t> executed, const Bytecode& bytecode);

}  // namespace mutforge

#endif  // MUTFORGE_COMPILER_BYTECODE_H_
