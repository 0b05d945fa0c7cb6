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

#ifndef MUTFORGE_TESTS_UNIT_MUTATION_SUPPORT_H_
#define MUTFORGE_TESTS_UNIT_MUTATION_SUPPORT_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mutforge/frontend/diff.h"
#include "mutforge/frontend/printer.h"
#include "mutforge/mutation/engine.h"

namespace mutforge::testing {

// Index of the candidate of the given node kind whose source text is `text`
// inside `scope`. `source` must be the text the engine's unit was parsed from.
inline size_t FindCandidate(const MutationEngine& engine,
                            const std::string& source, std::string_view node,
                            std::string_view text, std::string_view scope) {
  for (const MutationCandidate& candidate : engine.candidates()) {
    std::string_view spanned(source.data() + candidate.span.begin,
                             candidate.span.end - candidate.span.begin);
    if (candidate.node == node && spanned == text && candidate.scope == scope) {
      return candidate.index;
    }
  }
  throw std::runtime_error("no candidate " + std::string(text));
}

// The attempt at `candidate` under `op` whose mutated line reads `mutated`.
inline MutationAttempt FindAttempt(const MutationEngine& engine,
                                   size_t candidate, OperatorCode op,
                                   const std::string& mutated) {
  std::string original = Print(engine.unit().unit);
  for (size_t r = 0; r < engine.PoolSize(candidate, op); ++r) {
    MutationAttempt attempt = engine.Apply(candidate, op, r);
    DiffRecord diff = DiffText(original, Print(attempt.unit));
    if (diff.MutatedText() == mutated) return attempt;
  }
  throw std::runtime_error("no attempt yields " + mutated);
}

}  // namespace mutforge::testing

#endif  // MUTFORGE_TESTS_UNIT_MUTATION_SUPPORT_H_
