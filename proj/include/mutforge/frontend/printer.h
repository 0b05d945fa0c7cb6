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

#ifndef MUTFORGE_FRONTEND_PRINTER_H_
#define MUTFORGE_FRONTEND_PRINTER_H_

#include <string>

#include "mutforge/frontend/ast.h"

namespace mutforge {

// Canonical MiniSol formatting: one statement per line, four-space indent,
// minimal parentheses. Parse(Print(u)) is structurally equal to u.
std::string Print(const SourceUnit& unit);

std::string PrintExpr(const Expr& expr);

// The single-line header of a function, e.g.
// "function modifyCeo(address n) public onlyCeo {".
std::string PrintFunctionHeader(const FunctionDecl& function);

}  // namespace mutforge

#endif  // MUTFORGE_FRONTEND_PRINTER_H_
