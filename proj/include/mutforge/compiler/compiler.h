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

#ifndef MUTFORGE_COMPILER_COMPILER_H_
#define MUTFORGE_COMPILER_COMPILER_H_

#include <cstddef>
#include <stdexcept>

#include "mutforge/compiler/bytecode.h"
#include "mutforge/frontend/checker.h"

namespace mutforge {

// Raised only on an internal invariant violation; checked units always
// compile.
class CompileError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Lowers one contract of a checked unit to stack bytecode. There is no
// optimizer: structurally identical units give identical bytecode, and any
// syntactic change that survives lowering shows up in the output.
Bytecode Compile(const CheckedUnit& unit, size_t contract_index = 0);

}  // namespace mutforge

#endif  // MUTFORGE_COMPILER_COMPILER_H_
