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

#ifndef MUTFORGE_MUTATION_OPERATORS_H_
#define MUTFORGE_MUTATION_OPERATORS_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mutforge {

enum class OperatorCode {
  kAor,
  kBor,
  kEsd,
  kItscr,
  kJsrd,
  kLrA,
  kLrB,
  kLrI,
  kLrS,
  kMord,
  kQrd,
  kRar,
  kUord,
  kVdtscs,
};

inline constexpr std::array<OperatorCode, 14> kAllOperators = {
    OperatorCode::kAor,  OperatorCode::kBor,  OperatorCode::kEsd,
    OperatorCode::kItscr, OperatorCode::kJsrd, OperatorCode::kLrA,
    OperatorCode::kLrB,  OperatorCode::kLrI,  OperatorCode::kLrS,
    OperatorCode::kMord, OperatorCode::kQrd,  OperatorCode::kRar,
    OperatorCode::kUord, OperatorCode::kVdtscs,
};

// Short code such as "LR_I".
const char* OperatorName(OperatorCode op);
std::optional<OperatorCode> ParseOperator(std::string_view name);

const char* OperatorDescription(OperatorCode op);

// True for operators that only make sense for smart-contract languages.
bool IsSoliditySpecific(OperatorCode op);

// Weakness classification identifiers, e.g. "SWC-105". Informational only.
std::vector<std::string> SwcTags(OperatorCode op);

}  // namespace mutforge

#endif  // MUTFORGE_MUTATION_OPERATORS_H_
