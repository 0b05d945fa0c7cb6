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

#ifndef MUTFORGE_SRC_MUTATION_SITES_H_
#define MUTFORGE_SRC_MUTATION_SITES_H_

#include <cstddef>
#include <vector>

#include "mutforge/frontend/ast.h"

namespace mutforge::internal {

enum class SiteKind {
  kLiteral,
  kIdentifier,
  kIndex,
  kBuiltin,
  kBinary,
  kUnary,
  kStatement,
  kParameter,
  kModifierInvocation,
  kVisibility,
  kMutability,
};

// A mutable location in one contract. Pointers refer into the unit passed to
// EnumerateSites and stay valid while that unit is not modified.
struct Site {
  SiteKind kind = SiteKind::kStatement;
  SourceSpan span;
  ContractDecl* contract = nullptr;
  // Enclosing function or modifier body; both null in state initializers.
  FunctionDecl* function = nullptr;
  ModifierDecl* modifier = nullptr;
  int function_index = -1;
  int modifier_index = -1;

  Expr* expr = nullptr;
  // The expression is written (assignment target or increment operand).
  bool is_lvalue = false;

  // Statement sites: the containing block and position.
  std::vector<Stmt>* block = nullptr;
  size_t index = 0;
  int loop_depth = 0;

  // Parameter sites use `function` and `index`; modifier invocation sites use
  // `function` and `index` into its modifier list.

  Stmt& stmt() const { return (*block)[index]; }
};

// Sites of contract `contract_index` in document order. The same unit shape
// always yields the same sequence.
std::vector<Site> EnumerateSites(SourceUnit& unit, size_t contract_index);

}  // namespace mutforge::internal

#endif  // MUTFORGE_SRC_MUTATION_SITES_H_
