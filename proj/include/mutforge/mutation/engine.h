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

#ifndef MUTFORGE_MUTATION_ENGINE_H_
#define MUTFORGE_MUTATION_ENGINE_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mutforge/compiler/bytecode.h"
#include "mutforge/frontend/checker.h"
#include "mutforge/frontend/diagnostic.h"
#include "mutforge/frontend/diff.h"
#include "mutforge/mutation/operators.h"
#include "mutforge/mutation/random.h"
#include "nlohmann/json.hpp"

namespace mutforge {

// Address literal offered by LR_A in addition to the unit's own addresses.
inline constexpr uint64_t kAttackerAddress = 0xbadbad;

struct MutationCandidate {
  // Position in document order.
  size_t index = 0;
  std::string node;  // "literal", "identifier", "statement", ...
  SourceSpan span;
  // Enclosing function or modifier name; empty for state initializers.
  std::string scope;
  // Operators with a non-empty replacement pool, in canonical order.
  std::vector<OperatorCode> operators;
  // For identifiers: type, scope class, and constancy, e.g. "uint local".
  std::string identifier_class;
};

struct MutationAttempt {
  size_t candidate = 0;
  OperatorCode op = OperatorCode::kAor;
  // Index into the operator's replacement pool at that candidate.
  size_t replacement = 0;
  SourceSpan span;
  SourceUnit unit;
};

enum class Classification { kStillborn, kDuplicate, kViable };

const char* ClassificationName(Classification classification);

struct Mutant {
  uint32_t id = 0;
  OperatorCode op = OperatorCode::kAor;
  size_t candidate = 0;
  size_t replacement = 0;
  SourceSpan span;
  std::string file;
  // Canonical text of the mutated unit.
  std::string source;
  // Absent only when the mutant prints identically to the original.
  std::optional<DiffRecord> diff;
  Classification classification = Classification::kStillborn;
  std::optional<Digest> fingerprint;
  std::shared_ptr<const Bytecode> bytecode;
  // Why the mutant was stillborn.
  Diagnostics diagnostics;

  uint32_t Line() const;
  std::string OriginalText() const;
  std::string MutatedText() const;
  nlohmann::json ToJson() const;
};

struct GenerationConfig {
  size_t target = 50;
  size_t cap = 1000;
  uint64_t seed = 0;
};

struct GenerationStats {
  size_t attempts = 0;
  size_t stillborn = 0;
  size_t duplicate = 0;
  size_t viable = 0;
  bool exhausted = false;
  nlohmann::json ToJson() const;
};

struct GenerationResult {
  // Every attempt in order, whatever its classification.
  std::vector<Mutant> mutants;
  GenerationStats stats;

  std::vector<const Mutant*> Viable() const;
};

// Compiles a checked unit's first contract.
std::shared_ptr<const Bytecode> CompileShared(const CheckedUnit& unit);

// Re-checks and compiles `attempt`, comparing its fingerprint against the
// original and every fingerprint in `seen`. Viable fingerprints are added to
// `seen`.
Mutant Classify(const MutationAttempt& attempt, const SourceUnit& original,
                const Digest& original_fingerprint, std::set<Digest>& seen,
                uint32_t id);

// Mutation candidates and replacement pools of one checked unit. Only the
// first contract of the unit is mutated.
class MutationEngine {
 public:
  explicit MutationEngine(CheckedUnit unit);
  ~MutationEngine();
  MutationEngine(const MutationEngine&) = delete;
  MutationEngine& operator=(const MutationEngine&) = delete;

  const CheckedUnit& unit() const { return unit_; }
  const std::vector<MutationCandidate>& candidates() const {
    return candidates_;
  }
  const Digest& original_fingerprint() const { return original_fingerprint_; }
  std::shared_ptr<const Bytecode> original_bytecode() const {
    return original_bytecode_;
  }

  size_t PoolSize(size_t candidate, OperatorCode op) const;

  // Applies one pool entry to a fresh copy of the unit.
  MutationAttempt Apply(size_t candidate, OperatorCode op,
                        size_t replacement) const;

  // Draws a candidate, then an operator, then a replacement, each uniformly.
  // Absent when no candidate admits a mutation.
  std::optional<MutationAttempt> MutateOnce(Rng& rng) const;

  // Every (candidate, operator, replacement) combination in canonical order.
  std::vector<MutationAttempt> EnumerateAll() const;

  GenerationResult Generate(const GenerationConfig& config) const;

 private:
  struct Pools;

  CheckedUnit unit_;
  std::vector<MutationCandidate> candidates_;
  std::unique_ptr<Pools> pools_;
  std::shared_ptr<const Bytecode> original_bytecode_;
  Digest original_fingerprint_{};
};

}  // namespace mutforge

#endif  // MUTFORGE_MUTATION_ENGINE_H_
