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

#ifndef MUTFORGE_HARNESS_HARNESS_H_
#define MUTFORGE_HARNESS_HARNESS_H_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mutforge/compiler/bytecode.h"
#include "mutforge/harness/replay_test.h"
#include "mutforge/vm/vm.h"
#include "nlohmann/json.hpp"

namespace mutforge {

// Gas cap for every transaction of the unmutated replay.
inline constexpr uint64_t kOriginalGasCap = 100'000'000;

// Mutant transactions run with this multiple of the replay limit.
inline constexpr uint64_t kMutantCapFactor = 10;

// max(glh, ceil(gur * glh / guh)) in exact arithmetic. With guh == 0 the
// historic limit is returned and `*warning` is set when given.
uint64_t ComputeGlr(uint64_t glh, uint64_t guh, uint64_t gur,
                    bool* warning = nullptr);

// "name(uint,address)".
std::string MethodSignature(std::string_view name,
                            const std::vector<TypeKind>& params);

// Deterministic arguments for a pure call: uints in [0, 2^32), addresses from
// `accounts`, booleans, and short lowercase strings.
std::vector<Value> FuzzArgs(uint64_t seed, size_t step, std::string_view name,
                            const std::vector<TypeKind>& params,
                            const std::vector<Address>& accounts);

// Converts JSON test arguments against a parameter list. Addresses are hex
// strings and booleans JSON booleans. Throws TestFormatError on mismatch.
std::vector<Value> ConvertArgs(const nlohmann::json& args,
                               const std::vector<TypeKind>& params);

struct PureCallRecord {
  std::string method;
  std::vector<Value> args;
  PureResult result;
  bool operator==(const PureCallRecord&) const = default;
};

struct StepRecord {
  TxOutcome outcome;
  std::vector<PureCallRecord> pure_calls;
};

struct RunTrace {
  // Index 0 is the deployment; index k the k-th step.
  std::vector<StepRecord> steps;

  nlohmann::json ToJson() const;
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReplayOptions {
  // Signature source for test arguments and pure-call selection. Defaults to
  // the bytecode under replay.
  const Bytecode* abi = nullptr;
  // Per-record gas caps, deployment first. Empty means kOriginalGasCap.
  std::vector<uint64_t> gas_caps;
};

// Deploys on a pristine world and runs the first `prefix` steps, calling
// every pure and view method of the ABI after each record.
RunTrace Replay(std::shared_ptr<const Bytecode> code, const ReplayTest& test,
                size_t prefix, const ReplayOptions& options = {});

// Replays the unmutated contract. Throws CorpusError when the deployment
// fails or a step names a method the contract does not expose.
RunTrace ReplayOriginal(std::shared_ptr<const Bytecode> code,
                        const ReplayTest& test, size_t prefix);

// glr for the deployment and each replayed step of an original trace.
std::vector<uint64_t> ReplayLimits(const ReplayTest& test,
                                   const RunTrace& original);

// Replays a mutant with caps of kMutantCapFactor * glr.
RunTrace ReplayMutant(std::shared_ptr<const Bytecode> mutant,
                      const Bytecode& original_abi, const ReplayTest& test,
                      const std::vector<uint64_t>& glr, size_t prefix);

enum Condition : uint8_t {
  kConditionTx = 1,
  kConditionEv = 2,
  kConditionMeth = 4,
  kConditionLimit = 8,
};

using ConditionSet = uint8_t;

inline constexpr ConditionSet kTxEvMeth =
    kConditionTx | kConditionEv | kConditionMeth;
inline constexpr ConditionSet kTxEvMethLimit = kTxEvMeth | kConditionLimit;
inline constexpr std::array<Condition, 4> kAllConditions = {
    kConditionTx, kConditionEv, kConditionMeth, kConditionLimit};

const char* ConditionName(Condition condition);

// "TxEvMethLimit" style name; "None" for the empty set.
std::string ConditionSetName(ConditionSet conditions);

// Parses "tx,ev,meth,limit" (any subset, case insensitive).
std::optional<ConditionSet> ParseConditions(std::string_view text);

struct KillVerdict {
  // Earliest record index at which each condition fired, indexed like
  // kAllConditions.
  std::array<std::optional<size_t>, 4> first_step;

  bool killed() const { return first_kill().has_value(); }
  std::optional<size_t> first_kill() const;
  ConditionSet triggered() const;

  // Whether the mutant is killed by `conditions` within `prefix` steps.
  bool KilledBy(ConditionSet conditions, size_t prefix = SIZE_MAX) const;

  nlohmann::json ToJson() const;
};

// Compares traces record by record. Only `conditions` participate. Throws
// std::invalid_argument when the traces differ in length or glr is short.
KillVerdict Judge(const RunTrace& original, const RunTrace& mutant,
                  const std::vector<uint64_t>& glr, ConditionSet conditions);

// killed / viable; absent when there are no viable mutants.
std::optional<double> MutationScore(size_t killed, size_t viable);
std::optional<double> MutationScore(const std::vector<KillVerdict>& verdicts,
                                    ConditionSet conditions,
                                    size_t prefix = SIZE_MAX);

struct CurvePoint {
  size_t prefix = 0;
  std::optional<double> score;
  // 1.96 * sqrt(s (1 - s) / n).
  double ci_half_width = 0;
};

// Throws std::invalid_argument unless `prefixes` is sorted ascending.
std::vector<CurvePoint> ScoreCurve(const std::vector<KillVerdict>& verdicts,
                                   const std::vector<size_t>& prefixes,
                                   ConditionSet conditions);

}  // namespace mutforge

#endif  // MUTFORGE_HARNESS_HARNESS_H_
