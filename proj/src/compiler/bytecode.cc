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

#include "mutforge/compiler/bytecode.h"

#include <openssl/sha.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace mutforge {

std::string FormatAddress(Address address) {
  char buffer[43];
  std::snprintf(buffer, sizeof(buffer), "0x%040llx",
                static_cast<unsigned long long>(address));
  return buffer;
}

Address ParseAddress(const std::string& text) {
  if (text.size() < 3 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X')) {
    throw std::invalid_argument("address must be 0x-prefixed hex: " + text);
  }
  Address value = 0;
  int significant = 0;
  for (size_t i = 2; i < text.size(); ++i) {
    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
    int digit;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      digit = c - 'a' + 10;
    } else {
      throw std::invalid_argument("malformed address: " + text);
    }
    if (significant > 0 || digit != 0) {
      if (++significant > 16) {
        throw std::invalid_argument("address out of range: " + text);
      }
    }
    value = (value << 4) | static_cast<Address>(digit);
  }
  return value;
}

nlohmann::json ValueToJson(const Value& value) {
  if (const auto* word = std::get_if<uint64_t>(&value)) return *word;
  return std::get<std::string>(value);
}

namespace {

class Writer {
 public:
  void U8(uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void U32(uint32_t v) {
    for (int i = 0; i < 4; ++i) U8(static_cast<uint8_t>(v >> (8 * i)));
  }
  void U64(uint64_t v) {
    for (int i = 0; i < 8; ++i) U8(static_cast<uint8_t>(v >> (8 * i)));
  }
  void Str(const std::string& s) {
    U32(static_cast<uint32_t>(s.size()));
    out_ += s;
  }
  void Count(size_t n) { U32(static_cast<uint32_t>(n)); }
  std::string Take() { return std::move(out_); }

 private:
  std::string out_;
};

void WriteValue(Writer& w, const Value& value) {
  if (const auto* word = std::get_if<uint64_t>(&value)) {
    w.U8(0);
    w.U64(*word);
  } else {
    w.U8(1);
    w.Str(std::get<std::string>(value));
  }
}

void WriteKinds(Writer& w, const std::vector<TypeKind>& kinds) {
  w.Count(kinds.size());
  for (TypeKind kind : kinds) w.U8(static_cast<uint8_t>(kind));
}

const char* SlotKindName(SlotKind kind) {
  switch (kind) {
    case SlotKind::kWord:
      return "word";
    case SlotKind::kString:
      return "string";
    case SlotKind::kMapping:
      return "mapping";
  }
  return "?";
}

std::vector<std::string> KindNames(const std::vector<TypeKind>& kinds) {
  std::vector<std::string> names;
  for (TypeKind kind : kinds) names.push_back(TypeName(Type{kind}));
  return names;
}

}  // namespace

const DispatchEntry* Bytecode::FindSelector(std::string_view selector) const {
  auto it = std::lower_bound(
      dispatcher.begin(), dispatcher.end(), selector,
      [](const DispatchEntry& e, std::string_view s) { return e.selector < s; });
  if (it == dispatcher.end() || it->selector != selector) {
    return nullptr;
  }
  return &*it;
}

std::string Bytecode::Serialize() const {
  Writer w;
  w.Str("MFBC1");
  w.Count(instructions.size());
  for (const Instruction& instruction : instructions) {
    w.U8(static_cast<uint8_t>(instruction.op));
    w.U64(instruction.operand);
  }
  w.Count(constants.size());
  for (const Value& constant : constants) WriteValue(w, constant);
  w.Count(dispatcher.size());
  for (const DispatchEntry& entry : dispatcher) {
    w.Str(entry.selector);
    w.U32(entry.function);
    w.U8(static_cast<uint8_t>(entry.visibility));
    w.U8(static_cast<uint8_t>(entry.mutability));
    WriteKinds(w, entry.params);
    w.U8(static_cast<uint8_t>(entry.returns));
    w.Count(entry.modifier_entries.size());
    for (uint32_t index : entry.modifier_entries) w.U32(index);
  }
  w.Count(functions.size());
  for (const FunctionEntry& function : functions) {
    w.U32(function.entry);
    w.U32(function.param_count);
    w.Count(function.frame.size());
    for (SlotKind kind : function.frame) w.U8(static_cast<uint8_t>(kind));
    w.U8(function.returns_value ? 1 : 0);
  }
  w.Count(storage.size());
  for (SlotKind kind : storage) w.U8(static_cast<uint8_t>(kind));
  w.Count(events.size());
  for (const EventEntry& event : events) {
    w.Str(event.name);
    WriteKinds(w, event.params);
  }
  w.U8(init ? 1 : 0);
  if (init) {
    w.U32(init->function);
    w.U8(static_cast<uint8_t>(init->mutability));
    WriteKinds(w, init->params);
  }
  return w.Take();
}

nlohmann::json Bytecode::ToJson(const GasTable& gas) const {
  nlohmann::json listing = nlohmann::json::array();
  for (size_t i = 0; i < instructions.size(); ++i) {
    listing.push_back({{"index", i},
                       {"opcode", OpcodeName(instructions[i].op)},
                       {"operand", instructions[i].operand},
                       {"gas", gas.Cost(instructions[i].op)}});
  }
  nlohmann::json pool = nlohmann::json::array();
  for (const Value& constant : constants) pool.push_back(ValueToJson(constant));
  nlohmann::json table = nlohmann::json::array();
  for (const DispatchEntry& entry : dispatcher) {
    table.push_back({{"selector", entry.selector},
                     {"function", entry.function},
                     {"entry", functions.at(entry.function).entry},
                     {"visibility", VisibilityName(entry.visibility)},
                     {"mutability", MutabilityName(entry.mutability)},
                     {"params", KindNames(entry.params)},
                     {"returns", TypeName(Type{entry.returns})},
                     {"modifier_entries", entry.modifier_entries}});
  }
  nlohmann::json slots = nlohmann::json::array();
  for (SlotKind kind : storage) slots.push_back(SlotKindName(kind));
  nlohmann::json event_table = nlohmann::json::array();
  for (const EventEntry& event : events) {
    event_table.push_back(
        {{"name", event.name}, {"params", KindNames(event.params)}});
  }
  nlohmann::json result = {{"instructions", listing},
                           {"constants", pool},
                           {"dispatcher", table},
                           {"storage", slots},
                           {"events", event_table},
                           {"fingerprint", DigestHex(Fingerprint(*this))}};
  if (init) {
    result["init"] = {{"function", init->function},
                      {"entry", functions.at(init->function).entry},
                      {"mutability", MutabilityName(init->mutability)},
                      {"params", KindNames(init->params)}};
  }
  return result;
}

Digest Fingerprint(const Bytecode& bytecode) {
  std::string bytes = bytecode.Serialize();
  Digest digest{};
  SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(),
         digest.data());
  return digest;
}

std::string DigestHex(const Digest& digest) {
  static const char* kHex = "0123456789abcdef";
  std::string out;
  out.reserve(digest.size() * 2);
  for (uint8_t byte : digest) {
    out.push_back(kHex[byte >> 4]);
    out.push_back(kHex[byte & 0xf]);
  }
  return out;
}

double Coverage(std::span<const uint32_t> executed, const Bytecode& bytecode) {
  size_t total = bytecode.instructions.size();
  std::vector<bool> seen(total, false);
  size_t distinct = 0;
  for (uint32_t index : executed) {
    if (index >= total) {
      throw std::out_of_range("instruction index " + std::to_string(index) +
                              " outside bytecode of size " +
                              std::to_string(total));
    }
    if (!seen[index]) {
      seen[index] = true;
      ++distinct;
    }
  }
  return total == 0 ? 0.0
                    : static_cast<double>(distinct) / static_cast<double>(total);
}

}  // namespace mutforge
