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

#include "mutforge/harness/harness.h"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "mutforge/mutation/random.h"

namespace mutforge {

uint64_t ComputeGlr(uint64_t glh, uint64_t guh, uint64_t gur, bool* warning) {
  if (warning != nullptr) *warning = false;
  if (guh == 0) {
    if (warning != nullptr) *warning = true;
    return glh;
  }
  unsigned __int128 scaled =
      (static_cast<unsigned __int128>(gur) * glh + guh - 1) / guh;
  if (scaled > UINT64_MAX) return UINT64_MAX;
  return std::max(glh, static_cast<uint64_t>(scaled));
}

std::string MethodSignature(std::string_view name,
                            const std::vector<TypeKind>& params) {
  std::string signature(name);
  signature += "(";
  for (size_t i = 0; i < params.size(); ++i) {
    if (i > 0) signature += ",";
    signature += TypeName(Type{params[i]});
  }
  return signature + ")";
}

std::vector<Value> FuzzArgs(uint64_t seed, size_t step, std::string_view name,
                            const std::vector<TypeKind>& params,
                            const std::vector<Address>& accounts) {
  uint64_t state = MixSeed(seed, step);
  state = MixSeed(state, Fnv1a(name));
  state = MixSeed(state, Fnv1a(MethodSignature(name, params)));
  Rng rng(state);
  std::vector<Value> args;
  for (TypeKind kind : params) {
    switch (kind) {
      case TypeKind::kUint:
        args.emplace_back(UniformIndex(rng, uint64_t{1} << 32));
        break;
      case TypeKind::kBool:
        args.emplace_back(UniformIndex(rng, 2));
        break;
      case TypeKind::kAddress:
        args.emplace_back(accounts.empty()
                              ? uint64_t{0}
                              : accounts[UniformIndex(rng, accounts.size())]);
        break;
      case TypeKind::kString: {
        std::string text(UniformIndex(rng, 9), 'a');
        for (char& c : text) c = static_cast<char>('a' + UniformIndex(rng, 26));
        args.emplace_back(std::move(text));
        break;
      }
      default:
        args.emplace_back(uint64_t{0});
        break;
    }
  }
  return args;
}

std::vector<Value> ConvertArgs(const nlohmann::json& args,
                               const std::vector<TypeKind>& params) {
  if (!args.is_array() || args.size() != params.size()) {
    throw TestFormatError("expected " + std::to_string(params.size()) +
                          " arguments");
  }
  std::vector<Value> values;
  for (size_t i = 0; i < params.size(); ++i) {
    const nlohmann::json& arg = args[i];
    switch (params[i]) {
      case TypeKind::kUint:
        if (!arg.is_number_unsigned()) {
          throw TestFormatError("argument " + std::to_string(i + 1) +
                                " must be an unsigned integer");
        }
        values.emplace_back(arg.get<uint64_t>());
        break;
      case TypeKind::kBool:
        if (!arg.is_boolean()) {
          throw TestFormatError("argument " + std::to_string(i + 1) +
                                " must be a boolean");
        }
        values.emplace_back(uint64_t{arg.get<bool>() ? 1u : 0u});
        break;
      case TypeKind::kAddress:
        try {
          values.emplace_back(ParseAddress(arg.get<std::string>()));
        } catch (const std::exception&) {
          throw TestFormatError("argument " + std::to_string(i + 1) +
                                " must be a hex address");
        }
        break;
      case TypeKind::kString:
        if (!arg.is_string()) {
          throw TestFormatError("argument " + std::to_string(i + 1) +
                                " must be a string");
        }
        values.emplace_back(arg.get<std::string>());
        break;
      default:
        throw TestFormatError("unsupported parameter type");
    }
  }
  return values;
}

nlohmann::json RunTrace::ToJson() const {
  nlohmann::json records = nlohmann::json::array();
  for (const StepRecord& step : steps) {
    nlohmann::json calls = nlohmann::json::array();
    for (const PureCallRecord& call : step.pure_calls) {
      nlohmann::json args = nlohmann::json::array();
      for (const Value& arg : call.args) args.push_back(ValueToJson(arg));
      calls.push_back({{"method", call.method},
                       {"args", args},
                       {"result", call.result.ToJson()}});
    }
    records.push_back({{"outcome", step.outcome.ToJson()},
                       {"pure_calls", calls}});
  }
  return records;
}

namespace {

struct PureMethod {
  std::string name;
  std::vector<TypeKind> params;
};

std::vector<PureMethod> PureMethods(const Bytecode& abi) {
  std::vector<PureMethod> methods;
  for (const DispatchEntry& entry : abi.dispatcher) {
    if (entry.mutability == Mutability::kPure ||
        entry.mutability == Mutability::kView) {
      methods.push_back({entry.selector, entry.params});
    }
  }
  return methods;
}

std::vector<PureCallRecord> SimulateDapp(const WorldState& world,
                                         Address contract,
                                         const std::vector<PureMethod>& methods,
                                         const ReplayTest& test,
                                         const std::vector<Address>& accounts,
                                         size_t step) {
  std::vector<PureCallRecord> calls;
  for (const PureMethod& method : methods) {
    PureCallRecord record;
    record.method = method.name;
    record.args =
        FuzzArgs(test.fuzz_seed, step, method.name, method.params, accounts);
    record.result = CallPure(world, contract, method.name, record.args,
                             test.deployment.sender);
    calls.push_back(std::move(record));
  }
  return calls;
}

}  // namespace

RunTrace Replay(std::shared_ptr<const Bytecode> code, const ReplayTest& test,
                size_t prefix, const ReplayOptions& options) {
  if (prefix > test.steps.size()) {
    throw std::invalid_argument("prefix exceeds the test length");
  }
  const Bytecode& abi = options.abi != nullptr ? *options.abi : *code;
  auto cap = [&](size_t record) {
    if (options.gas_caps.empty()) return kOriginalGasCap;
    if (record >= options.gas_caps.size()) {
      throw std::invalid_argument("missing gas cap for record " +
                                  std::to_string(record));
    }
    return options.gas_caps[record];
  };

  WorldState world;
  std::vector<Address> accounts;
  for (const AccountSpec& account : test.accounts) {
    world.balances[account.address] = account.balance;
    accounts.push_back(account.address);
  }
  std::vector<PureMethod> methods = PureMethods(abi);
  RunTrace trace;

  Transaction deploy;
  deploy.sender = test.deployment.sender;
  deploy.args = ConvertArgs(test.deployment.args,
                            abi.init ? abi.init->params
                                     : std::vector<TypeKind>{});
  deploy.value = test.deployment.value;
  deploy.timestamp = test.deployment.timestamp;
  deploy.gas_limit = cap(0);
  // A pristine world always places the first contract at the same address.
  Address contract = world.next_contract;
  StepRecord record;
  record.outcome = Deploy(world, code, deploy);
  record.pure_calls = SimulateDapp(world, contract, methods, test, accounts, 0);
  trace.steps.push_back(std::move(record));

  for (size_t i = 0; i < prefix; ++i) {
    const ReplayStep& step = test.steps[i];
    const DispatchEntry* entry = abi.FindSelector(step.method);
    Transaction tx;
    tx.sender = step.sender;
    tx.to = contract;
    tx.method = step.method;
    tx.args = entry != nullptr ? ConvertArgs(step.args, entry->params)
                               : std::vector<Value>{};
    tx.value = step.value;
    tx.timestamp = step.timestamp;
    tx.gas_limit = cap(i + 1);
    StepRecord next;
    next.outcome = ExecuteTx(world, tx);
    next.pure_calls =
        SimulateDapp(world, contract, methods, test, accounts, i + 1);
    trace.steps.push_back(std::move(next));
  }
  return trace;
}

RunTrace ReplayOriginal(std::shared_ptr<const Bytecode> code,
                        const ReplayTest& test, size_t prefix) {
  for (size_t i = 0; i < prefix && i < test.steps.size(); ++i) {
    if (code->FindSelector(test.steps[i].method) == nullptr) {
      throw CorpusError("step " + std::to_string(i + 1) +
                        " calls unknown method '" + test.steps[i].method + "'");
    }
  }
  RunTrace trace = Replay(code, test, prefix);
  const TxOutcome& deployment = trace.steps.at(0).outcome;
  if (deployment.status != TxStatus::kSuccess) {
    throw CorpusError(std::string("original deployment ") +
                      TxStatusName(deployment.status) + " (" +
                      FailureCodeName(deployment.failure) + ")");
  }
  return trace;
}

std::vector<uint64_t> ReplayLimits(const ReplayTest& test,
                                   const RunTrace& original) {
  std::vector<uint64_t> limits;
  for (size_t k = 0; k < original.steps.size(); ++k) {
    uint64_t glh = k == 0 ? test.deployment.glh : test.steps.at(k - 1).glh;
    uint64_t guh = k == 0 ? test.deployment.guh : test.steps.at(k - 1).guh;
    limits.push_back(ComputeGlr(glh, guh, original.steps[k].outcome.gas_used));
  }
  return limits;
}

RunTrace ReplayMutant(std::shared_ptr<const Bytecode> mutant,
                      const Bytecode& original_abi, const ReplayTest& test,
                      const std::vector<uint64_t>& glr, size_t prefix) {
  ReplayOptions options;
  options.abi = &original_abi;
  for (size_t k = 0; k <= prefix; ++k) {
    uint64_t limit = glr.at(k);
    options.gas_caps.push_back(limit > UINT64_MAX / kMutantCapFactor
                                   ? UINT64_MAX
                                   : limit * kMutantCapFactor);
  }
  return Replay(std::move(mutant), test, prefix, options);
}

const char* ConditionName(Condition condition) {
  switch (condition) {
    case kConditionTx:
      return "Tx";
    case kConditionEv:
      return "Ev";
    case kConditionMeth:
      return "Meth";
    case kConditionLimit:
      return "Limit";
  }
  return "?";
}

std::string ConditionSetName(ConditionSet conditions) {
  std::string name;
  for (Condition condition : kAllConditions) {
    if (conditions & condition) name += ConditionName(condition);
  }
  return name.empty() ? "None" : name;
}

std::optional<ConditionSet> ParseConditions(std::string_view text) {
  ConditionSet set = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string token(text.substr(start, comma - start));
    std::transform(token.begin(), token.end(), token.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (token == "tx") {
      set |= kConditionTx;
    } else if (token == "ev") {
      set |= kConditionEv;
    } else if (token == "meth") {
      set |= kConditionMeth;
    } else if (token == "limit") {
      set |= kConditionLimit;
    } else {
      return std::nullopt;
    }
    start = comma + 1;
  }
  return set;
}

std::optional<size_t> KillVerdict::first_kill() const {
  std::optional<size_t> first;
  for (const auto& step : first_step) {
    if (step && (!first || *step < *first)) first = step;
  }
  return first;
}

ConditionSet KillVerdict::triggered() const {
  ConditionSet set = 0;
  for (size_t i = 0; i < kAllConditions.size(); ++i) {
    if (first_step[i]) set |= kAllConditions[i];
  }
  return set;
}

bool KillVerdict::KilledBy(ConditionSet conditions, size_t prefix) const {
  for (size_t i = 0; i < kAllConditions.size(); ++i) {
    if ((conditions & kAllConditions[i]) && first_step[i] &&
        *first_step[i] <= prefix) {
      return true;
    }
  }
  return false;
}

nlohmann::json KillVerdict::ToJson() const {
  nlohmann::json conditions = nlohmann::json::object();
  for (size_t i = 0; i < kAllConditions.size(); ++i) {
    conditions[ConditionName(kAllConditions[i])] =
        first_step[i] ? nlohmann::json(*first_step[i]) : nlohmann::json();
  }
  std::optional<size_t> first = first_kill();
  return {{"killed", killed()},
          {"first_kill", first ? nlohmann::json(*first) : nlohmann::json()},
          {"conditions", conditions}};
}

KillVerdict Judge(const RunTrace& original, const RunTrace& mutant,
                  const std::vector<uint64_t>& glr, ConditionSet conditions) {
  if (original.steps.size() != mutant.steps.size()) {
    throw std::invalid_argument("traces differ in length");
  }
  if ((conditions & kConditionLimit) && glr.size() < mutant.steps.size()) {
    throw std::invalid_argument("missing replay gas limits");
  }
  KillVerdict verdict;
  auto fire = [&](size_t slot, size_t k) {
    if ((conditions & kAllConditions[slot]) && !verdict.first_step[slot]) {
      verdict.first_step[slot] = k;
    }
  };
  for (size_t k = 0; k < original.steps.size(); ++k) {
    const StepRecord& a = original.steps[k];
    const StepRecord& b = mutant.steps[k];
    if (a.outcome.status != b.outcome.status) fire(0, k);
    if (a.outcome.events != b.outcome.events) fire(1, k);
    if (a.pure_calls != b.pure_calls) fire(2, k);
    if ((conditions & kConditionLimit) && b.outcome.gas_used > glr[k]) {
      fire(3, k);
    }
  }
  return verdict;
}

std::optional<double> MutationScore(size_t killed, size_t viable) {
  if (viable == 0) return std::nullopt;
  return static_cast<double>(killed) / static_cast<double>(viable);
}

std::optional<double> MutationScore(const std::vector<KillVerdict>& verdicts,
                                    ConditionSet conditions, size_t prefix) {
  size_t killed = std::count_if(
      verdicts.begin(), verdicts.end(),
      [&](const KillVerdict& v) { return v.KilledBy(conditions, prefix); });
  return MutationScore(killed, verdicts.size());
}

std::vector<CurvePoint> ScoreCurve(const std::vector<KillVerdict>& verdicts,
                                   const std::vector<size_t>& prefixes,
                                   ConditionSet conditions) {
  if (!std::is_sorted(prefixes.begin(), prefixes.end())) {
    throw std::invalid_argument("prefixes must be sorted ascending");
  }
  std::vector<CurvePoint> curve;
  for (size_t prefix : prefixes) {
    CurvePoint point;
    point.prefix = prefix;
    point.score = MutationScore(verdicts, conditions, prefix);
    if (point.score) {
      double s = *point.score;
      point.ci_half_width =
          1.96 * std::sqrt(s * (1 - s) / static_cast<double>(verdicts.size()));
    }
    curve.push_back(point);
  }
  return curve;
}

}  // namespace mutforge
