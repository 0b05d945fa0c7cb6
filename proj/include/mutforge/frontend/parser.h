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

#ifndef MUTFORGE_FRONTEND_PARSER_H_
#define MUTFORGE_FRONTEND_PARSER_H_

#include <string>
#include <string_view>
#include <variant>

#include "mutforge/frontend/ast.h"
#include "mutforge/frontend/diagnostic.h"

namespace mutforge {

// Either a parsed unit or the diagnostics explaining why parsing failed.
// Never throws on malformed input.
std::variant<SourceUnit, Diagnostics> Parse(std::string_view text,
                                            const std::string& file = "");

}  // namespace mutforge

#endif  // MUTFORGE_FRONTEND_PARSER_H_
