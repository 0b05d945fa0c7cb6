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

#ifndef MUTFORGE_FRONTEND_CHECKER_H_
#define MUTFORGE_FRONTEND_CHECKER_H_

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mutforge/frontend/ast.h"
#include "mutforge/frontend/diagnostic.h"

namespace mutforge {

struct StateVarInfo {
  std::string name;
  Type type;
  bool is_constant = false;
};

// A frame slot: parameters first, then locals in declaration order.
struct LocalInfo {
  std::string name;
  Type type;
  bool is_param = false;
};

struct ContractSymbols {
  std::vector<StateVarInfo> state_vars;
  std::map<std::string, int> state_index;
  std::map<std::string, int> function_index;
  std::map<std::string, int> modifier_index;
  std::map<std::string, int> event_index;
  // Indexed like ContractDecl::functions / ContractDecl::modifiers.
  std::vector<std::vector<LocalInfo>> function_frames;
  std::vector<std::vector<LocalInfo>> modifier_frames;

  const LocalInfo* FindLocal(int function, const std::string& name) const;
};

// A unit that passed Check(). Owns an annotated copy of the syntax tree:
// every identifier carries its binding and type, every local its frame slot.
struct CheckedUnit {
  SourceUnit unit;
  std::vector<ContractSymbols> contracts;
};

// Name resolution, strict typing (no implicit conversions), and state
// mutability rules. Deterministic: the same input always produces the same
// diagnostics in the same order.
std::variant<CheckedUnit, Diagnostics> Check(const SourceUnit& unit);

}  // namespace mutforge

#endif  // MUTFORGE_FRONTEND_CHECKER_H_
