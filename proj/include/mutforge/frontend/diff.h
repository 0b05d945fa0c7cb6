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

#ifndef MUTFORGE_FRONTEND_DIFF_H_
#define MUTFORGE_FRONTEND_DIFF_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "mutforge/frontend/ast.h"

namespace mutforge {

class DiffError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The changed region between two canonical printings, rendered like the
// classic diff(1) output: "<" lines from the original, ">" lines from the
// mutant. Lines are stripped of indentation.
struct DiffRecord {
  // 1-based line of the first changed line in the original printing.
  uint32_t line = 0;
  std::vector<std::string> removed;
  std::vector<std::string> added;

  std::string OriginalText() const;
  std::string MutatedText() const;
  // "< ...\n> ...\n"; an empty side renders as a bare marker.
  std::string Render() const;
};

// Throws DiffError when the units print identically or differ in more than
// one contiguous region.
DiffRecord Diff(const SourceUnit& original, const SourceUnit& mutant);

// Same as Diff() but over already-printed text.
DiffRecord DiffText(const std::string& original, const std::string& mutant);

}  // namespace mutforge

#endif  // MUTFORGE_FRONTEND_DIFF_H_
