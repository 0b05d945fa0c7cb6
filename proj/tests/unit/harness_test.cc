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
#include <cmath>
#include <limits>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "boost/multiprecision/cpp_int.hpp"
#include "gtest/gtest.h"
#include "mutforge/compiler/bytecode.h"
#include "mutforge/harness/replay_test.h"
#include "mutforge/mutation/engine.h"
#include "mutforge/mutation/random.h"
#include "unit/test_support.h"

namespace mutforge {
namespace {

using ::mutforge::testing::MustCheck;
using ::mutforge::testing::ReadCorpus;
using ::mutforge::testing::SourcePath;

std::shared_ptr<const Bytecode> CorpusCode(const std::string& name) {
  return CompileShared(MustCheck(ReadCorpus(name)));
}

ReplayTest CorpusTest(const std::string& name) {
  return ReplayTest::Load(SourcePath("corpus/" + name + ".test.json"));
}

uint64_t GlrOracle(uint64_t glh, uint64_t guh, uint64_t gur) {
  using boost::multiprecision::cpp_int;
  if (guh == 0) return glh;
  cpp_int product = cpp_int(gur) * cpp_int(glh);
  cpp_int scaled = (product + cpp_int(guh) - 1) / cpp_int(guh);
  cpp_int result = std::max(cpp_int(glh), scaled);
  cpp_int ceiling = cpp_int(std::numeric_limits<uint64_t>::max());
  if (result > ceiling) result = ceiling;
  return result.convert_to<uint64_t>();
}

TEST(GlrTest, PublishedExamples) {
  EXPECT_EQ(ComputeGlr(100000, 50000, 75000), 150000u);
  EXPECT_EQ(ComputeGlr(93520, 62347, 62347), 93520u);
}

TEST(GlrTest, MatchesBigIntegerOracle) {
  Rng rng(77);
  for (int i = 0; i < 50; ++i) {
    // Alternate small and full-width magnitudes to exercise overflow.
    uint64_t bound = (i % 2 == 0) ? 10'000'000 : 0;
    auto draw = [&]() {
      return bound == 0 ? rng() : UniformIndex(rng, bound);
    };
    uint64_t glh = draw();
    uint64_t guh = draw() + 1;
    uint64_t gur = draw();
    EXPECT_EQ(ComputeGlr(glh, guh, gur), GlrOracle(glh, guh, gur))
        << glh << " " << guh << " " << gur;
  }
}

TEST(GlrTest, RoundsUpAndNeverDropsBelowHistoricLimit) {
  EXPECT_EQ(ComputeGlr(10, 3, 4), 14u);
  EXPECT_EQ(ComputeGlr(10, 3, 1), 10u);
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    uint64_t glh = UniformIndex(rng, 1'000'000) + 1;
    uint64_t guh = UniformIndex(rng, glh) + 1;
    uint64_t gur = UniformIndex(rng, 1'000'000);
    uint64_t glr = ComputeGlr(glh, guh, gur);
    EXPECT_GE(glr, glh);
    if (gur >= guh) {
      EXPECT_GE(glr, gur);
    }
  }
}

TEST(GlrTest, ZeroHistoricUsageWarns) {
  bool warning = false;
  EXPECT_EQ(ComputeGlr(5000, 0, 9000, &warning), 5000u);
  EXPECT_TRUE(warning);
  warning = false;
  ComputeGlr(5000, 10, 9000, &warning);
  EXPECT_FALSE(warning);
}

TEST(FuzzArgsTest, DeterministicAndTyped) {
  std::vector<TypeKind> params = {TypeKind::kUint, TypeKind::kBool,
                                  TypeKind::kAddress, TypeKind::kString};
  std::vector<Address> accounts = {0xa11ce, 0xb0b};
  for (uint64_t seed = 0; seed < 200; ++seed) {
    auto args = FuzzArgs(seed, 3, "f", params, accounts);
    ASSERT_EQ(args.size(), 4u);
    EXPECT_EQ(args, FuzzArgs(seed, 3, "f", params, accounts));
    EXPECT_LT(std::get<uint64_t>(args[0]), uint64_t{1} << 32);
    EXPECT_LE(std::get<uint64_t>(args[1]), 1u);
    Address address = std::get<uint64_t>(args[2]);
    EXPECT_TRUE(address == 0xa11ce || address == 0xb0b);
    const std::string& text = std::get<std::string>(args[3]);
    EXPECT_LE(text.size(), 8u);
    for (char c : text) EXPECT_TRUE(c >= 'a' && c <= 'z');
  }
}

TEST(FuzzArgsTest, VariesWithStepAndMethod) {
  std::vector<TypeKind> params = {TypeKind::kUint};
  std::set<uint64_t> values;
  for (size_t step = 0; step < 20; ++step) {
    values.insert(std::get<uint64_t>(FuzzArgs(1, step, "f", params, {})[0]));
  }
  EXPECT_GT(values.size(), 15u);
  EXPECT_NE(FuzzArgs(1, 0, "f", params, {}), FuzzArgs(1, 0, "g", params, {}));
  EXPECT_TRUE(FuzzArgs(1, 0, "f", {}, {}).empty());
}

TEST(ConvertArgsTest, ConvertsAndRejects) {
  std::vector<TypeKind> params = {TypeKind::kUint, TypeKind::kAddress,
                                  TypeKind::kBool, TypeKind::kString};
  auto args = ConvertArgs(nlohmann::json::parse(R"([7, "0xb0b", true, "hi"])"),
                          params);
  ASSERT_EQ(args.size(), 4u);
  EXPECT_EQ(std::get<uint64_t>(args[0]), 7u);
  EXPECT_EQ(std::get<uint64_t>(args[1]), 0xb0bu);
  EXPECT_EQ(std::get<uint64_t>(args[2]), 1u);
  EXPECT_EQ(std::get<std::string>(args[3]), "hi");
  EXPECT_THROW(ConvertArgs(nlohmann::json::parse("[1]"), params),
               TestFormatError);
  EXPECT_THROW(ConvertArgs(nlohmann::json::parse(R"(["x"])"),
                           {TypeKind::kUint}),
               TestFormatError);
  EXPECT_THROW(ConvertArgs(nlohmann::json::parse("[1]"), {TypeKind::kAddress}),
               TestFormatError);
}

TEST(ReplayTestFormatTest, RoundTripsAndValidates) {
  ReplayTest test = CorpusTest("luckdraw");
  EXPECT_EQ(test.steps.size(), 26u);
  EXPECT_EQ(test.steps[0].glh, 93520u);
  EXPECT_EQ(test.steps[0].guh, 62347u);
  EXPECT_EQ(ReplayTest::FromJson(test.ToJson()).ToJson(), test.ToJson());

  nlohmann::json json = test.ToJson();
  nlohmann::json over = json;
  over["steps"][0]["guh"] = 100000;
  EXPECT_THROW(ReplayTest::FromJson(over), TestFormatError);
  nlohmann::json backwards = json;
  backwards["steps"][1]["timestamp"] = 0;
  EXPECT_THROW(ReplayTest::FromJson(backwards), TestFormatError);
  nlohmann::json no_sender = json;
  no_sender["steps"][0].erase("sender");
  EXPECT_THROW(ReplayTest::FromJson(no_sender), TestFormatError);
  nlohmann::json bad_address = json;
  bad_address["deployment"]["sender"] = "0xzz";
  EXPECT_THROW(ReplayTest::FromJson(bad_address), TestFormatError);
  nlohmann::json negative = json;
  negative["steps"][0]["value"] = -1;
  EXPECT_THROW(ReplayTest::FromJson(negative), TestFormatError);
  EXPECT_THROW(ReplayTest::FromJson(nlohmann::json::array()), TestFormatError);
}

TEST(ReplayTest, PrefixControlsRecordCount) {
  auto code = CorpusCode("luckdraw");
  ReplayTest test = CorpusTest("luckdraw");
  EXPECT_EQ(ReplayOriginal(code, test, 0).steps.size(), 1u);
  EXPECT_EQ(ReplayOriginal(code, test, 5).steps.size(), 6u);
  EXPECT_EQ(ReplayOriginal(code, test, 26).steps.size(), 27u);
  EXPECT_THROW(ReplayOriginal(code, test, 27), std::invalid_argument);
}

TEST(ReplayTest, Deterministic) {
  auto code = CorpusCode("luckdraw");
  ReplayTest test = CorpusTest("luckdraw");
  EXPECT_EQ(ReplayOriginal(code, test, 26).ToJson(),
            ReplayOriginal(code, test, 26).ToJson());
}

TEST(ReplayTest, LuckdrawGasProfile) {
  auto code = CorpusCode("luckdraw");
  ReplayTest test = CorpusTest("luckdraw");
  RunTrace trace = ReplayOriginal(code, test, 26);
  // The first play only seeds the jackpot; later plays run the mixing loop.
  EXPECT_EQ(trace.steps[1].outcome.gas_used, 21475u);
  EXPECT_EQ(trace.steps[2].outcome.gas_used, 272592u);
  std::vector<uint64_t> glr = ReplayLimits(test, trace);
  ASSERT_EQ(glr.size(), 27u);
  EXPECT_EQ(glr[1], 93520u);
  for (size_t k = 1; k < glr.size(); ++k) {
    EXPECT_GE(glr[k], test.steps[k - 1].glh);
    EXPECT_GE(glr[k], trace.steps[k].outcome.gas_used);
  }
}

TEST(ReplayTest, OriginalUnderReplayLimitsIsAFixedPoint) {
  for (const char* name :
       {"luckdraw", "token", "wallet", "auction", "registry", "voting"}) {
    auto code = CorpusCode(name);
    ReplayTest test = CorpusTest(name);
    RunTrace original = ReplayOriginal(code, test, test.steps.size());
    std::vector<uint64_t> glr = ReplayLimits(test, original);
    RunTrace again = ReplayMutant(code, *code, test, glr, test.steps.size());
    EXPECT_EQ(again.ToJson(), original.ToJson()) << name;
    EXPECT_FALSE(Judge(original, again, glr, kTxEvMethLimit).killed()) << name;
  }
}

TEST(ReplayTest, LuckdrawCoverageIsFrozen) {
  auto code = CorpusCode("luckdraw");
  ReplayTest test = CorpusTest("luckdraw");
  RunTrace trace = ReplayOriginal(code, test, 26);
  std::vector<uint32_t> executed;
  for (const StepRecord& record : trace.steps) {
    executed.insert(executed.end(), record.outcome.trace.begin(),
                    record.outcome.trace.end());
  }
  EXPECT_NEAR(Coverage(executed, *code), 0.70588235294117652, 1e-12);
}

constexpr const char* kLoop = R"(contract Loop {
    uint total;

    function spin(uint n) public {
        uint i = 0;
        while(i < n) {
            total = total + 1;
            i = i + 1;
        }
    }

    function Total() public view returns (uint) {
        return total;
    }
}
)";

ReplayTest LoopTest() {
  return ReplayTest::FromJson(nlohmann::json::parse(R"({
    "deployment": {"sender": "0xa11ce", "timestamp": 1, "glh": 100000,
                   "guh": 50000},
    "steps": [
      {"method": "spin", "args": [3], "sender": "0xa11ce", "timestamp": 2,
       "glh": 100000, "guh": 50000},
      {"method": "spin", "args": [4], "sender": "0xb0b", "timestamp": 3,
       "glh": 100000, "guh": 50000}
    ],
    "accounts": [{"address": "0xa11ce"}, {"address": "0xb0b"}]
  })"));
}

TEST(ReplayTest, MutantRunsOutOfGasAtTenTimesTheLimit) {
  auto code = CompileShared(MustCheck(kLoop));
  std::string looping = kLoop;
  looping.replace(looping.find("i < n"), 5, "i < n * 100000");
  auto mutant = CompileShared(MustCheck(looping));
  ReplayTest test = LoopTest();
  RunTrace original = ReplayOriginal(code, test, 2);
  std::vector<uint64_t> glr = ReplayLimits(test, original);
  RunTrace trace = ReplayMutant(mutant, *code, test, glr, 2);
  ASSERT_EQ(trace.steps.size(), 3u);
  EXPECT_EQ(trace.steps[1].outcome.status, TxStatus::kOutOfGas);
  EXPECT_EQ(trace.steps[1].outcome.gas_used, kMutantCapFactor * glr[1]);
  KillVerdict verdict = Judge(original, trace, glr, kTxEvMethLimit);
  EXPECT_EQ(verdict.first_step[0], std::optional<size_t>(1));
  EXPECT_EQ(verdict.first_step[3], std::optional<size_t>(1));
  EXPECT_EQ(verdict.first_kill(), std::optional<size_t>(1));
}

TEST(ReplayTest, UnknownMethodIsACorpusError) {
  auto code = CompileShared(MustCheck(kLoop));
  ReplayTest test = LoopTest();
  test.steps[1].method = "missing";
  EXPECT_THROW(ReplayOriginal(code, test, 2), CorpusError);
  EXPECT_NO_THROW(ReplayOriginal(code, test, 1));
}

TEST(ReplayTest, PureCallsFollowEveryRecord) {
  auto code = CompileShared(MustCheck(kLoop));
  RunTrace trace = ReplayOriginal(code, LoopTest(), 2);
  std::vector<uint64_t> totals;
  for (const StepRecord& record : trace.steps) {
    ASSERT_EQ(record.pure_calls.size(), 1u);
    EXPECT_EQ(record.pure_calls[0].method, "Total");
    totals.push_back(std::get<uint64_t>(*record.pure_calls[0].result.value));
  }
  EXPECT_EQ(totals, (std::vector<uint64_t>{0, 3, 7}));
}

RunTrace SyntheticTrace(size_t records) {
  RunTrace trace;
  for (size_t i = 0; i < records; ++i) {
    StepRecord record;
    record.outcome.gas_used = 1000;
    record.outcome.events.push_back({"E", {Value{uint64_t{i}}}});
    record.pure_calls.push_back({"get", {}, {false, Value{uint64_t{i}}}});
    trace.steps.push_back(record);
  }
  return trace;
}

TEST(JudgeTest, EachConditionFiresOnItsOwnDifference) {
  RunTrace original = SyntheticTrace(5);
  std::vector<uint64_t> glr(5, 2000);
  EXPECT_FALSE(Judge(original, original, glr, kTxEvMethLimit).killed());

  RunTrace status = original;
  status.steps[3].outcome.status = TxStatus::kFailed;
  RunTrace event = original;
  event.steps[2].outcome.events[0].args[0] = Value{uint64_t{99}};
  RunTrace pure = original;
  pure.steps[1].pure_calls[0].result = PureResult::Reverted();
  RunTrace gas = original;
  gas.steps[4].outcome.gas_used = 2001;

  struct Case {
    const RunTrace* mutant;
    size_t slot;
    size_t step;
  };
  for (const Case& c : {Case{&status, 0, 3}, Case{&event, 1, 2},
                        Case{&pure, 2, 1}, Case{&gas, 3, 4}}) {
    KillVerdict all = Judge(original, *c.mutant, glr, kTxEvMethLimit);
    for (size_t slot = 0; slot < 4; ++slot) {
      if (slot == c.slot) {
        EXPECT_EQ(all.first_step[slot], std::optional<size_t>(c.step));
      } else {
        EXPECT_FALSE(all.first_step[slot].has_value());
      }
    }
    ConditionSet only = kAllConditions[c.slot];
    EXPECT_TRUE(Judge(original, *c.mutant, glr, only).killed());
    EXPECT_FALSE(Judge(original, *c.mutant, glr,
                       kTxEvMethLimit & ~only).killed());
    EXPECT_FALSE(all.KilledBy(only, c.step - 1));
    EXPECT_TRUE(all.KilledBy(only, c.step));
  }
  // Gas exactly at the limit is not a kill.
  gas.steps[4].outcome.gas_used = 2000;
  EXPECT_FALSE(Judge(original, gas, glr, kConditionLimit).killed());
}

TEST(JudgeTest, BehaviouralConditionsAreSymmetric) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    RunTrace a = SyntheticTrace(4);
    RunTrace b = SyntheticTrace(4);
    size_t k = UniformIndex(rng, 4);
    switch (UniformIndex(rng, 3)) {
      case 0: b.steps[k].outcome.status = TxStatus::kOutOfGas; break;
      case 1: b.steps[k].outcome.events.clear(); break;
      default: b.steps[k].pure_calls[0].result.value = Value{"x"}; break;
    }
    std::vector<uint64_t> glr(4, 5000);
    KillVerdict ab = Judge(a, b, glr, kTxEvMeth);
    KillVerdict ba = Judge(b, a, glr, kTxEvMeth);
    EXPECT_EQ(ab.first_step, ba.first_step);
    EXPECT_EQ(ab.first_kill(), std::optional<size_t>(k));
  }
}

TEST(JudgeTest, RejectsMismatchedTraces) {
  std::vector<uint64_t> glr(5, 2000);
  EXPECT_THROW(Judge(SyntheticTrace(5), SyntheticTrace(4), glr, kTxEvMeth),
               std::invalid_argument);
  EXPECT_THROW(Judge(SyntheticTrace(5), SyntheticTrace(5),
                     std::vector<uint64_t>(3, 2000), kTxEvMethLimit),
               std::invalid_argument);
}

TEST(ConditionTest, ParseAndName) {
  EXPECT_EQ(ParseConditions("tx"), std::optional<ConditionSet>(kConditionTx));
  EXPECT_EQ(ParseConditions("TX,ev,Meth,limit"),
            std::optional<ConditionSet>(kTxEvMethLimit));
  EXPECT_EQ(ParseConditions("limit,tx"),
            std::optional<ConditionSet>(kConditionTx | kConditionLimit));
  EXPECT_FALSE(ParseConditions("gas").has_value());
  EXPECT_FALSE(ParseConditions("tx,,ev").has_value());
  EXPECT_EQ(ConditionSetName(kTxEvMethLimit), "TxEvMethLimit");
  EXPECT_EQ(ConditionSetName(kConditionLimit | kConditionTx), "TxLimit");
  EXPECT_EQ(ConditionSetName(0), "None");
  for (ConditionSet set = 1; set < 16; ++set) {
    std::string name = ConditionSetName(set);
    std::string list;
    for (Condition c : kAllConditions) {
      if (set & c) list += std::string(list.empty() ? "" : ",") + ConditionName(c);
    }
    EXPECT_EQ(ParseConditions(list), std::optional<ConditionSet>(set)) << name;
  }
}

TEST(ScoreTest, Ratios) {
  EXPECT_NEAR(*MutationScore(17056, 47870), 0.356298, 1e-6);
  EXPECT_EQ(MutationScore(0, 5), std::optional<double>(0.0));
  EXPECT_EQ(MutationScore(5, 5), std::optional<double>(1.0));
  EXPECT_FALSE(MutationScore(0, 0).has_value());
  EXPECT_FALSE(MutationScore(std::vector<KillVerdict>{}, kTxEvMeth).has_value());
}

std::vector<KillVerdict> RandomVerdicts(uint64_t seed, size_t n) {
  Rng rng(seed);
  std::vector<KillVerdict> verdicts(n);
  for (KillVerdict& verdict : verdicts) {
    for (auto& slot : verdict.first_step) {
      if (UniformIndex(rng, 2) == 0) slot = UniformIndex(rng, 30);
    }
  }
  return verdicts;
}

TEST(ScoreTest, ConditionDominance) {
  std::vector<KillVerdict> verdicts = RandomVerdicts(11, 500);
  for (size_t prefix : {0, 3, 10, 29}) {
    double tx = *MutationScore(verdicts, kConditionTx, prefix);
    double behaviour = *MutationScore(verdicts, kTxEvMeth, prefix);
    double all = *MutationScore(verdicts, kTxEvMethLimit, prefix);
    EXPECT_LE(tx, behaviour);
    EXPECT_LE(behaviour, all);
  }
}

TEST(CurveTest, MonotoneWithBinomialInterval) {
  std::vector<KillVerdict> verdicts = RandomVerdicts(12, 400);
  std::vector<size_t> prefixes;
  for (size_t p = 0; p <= 30; ++p) prefixes.push_back(p);
  auto curve = ScoreCurve(verdicts, prefixes, kTxEvMethLimit);
  ASSERT_EQ(curve.size(), prefixes.size());
  for (size_t i = 0; i < curve.size(); ++i) {
    EXPECT_EQ(curve[i].prefix, prefixes[i]);
    double s = *curve[i].score;
    EXPECT_NEAR(curve[i].ci_half_width, 1.96 * std::sqrt(s * (1 - s) / 400),
                1e-12);
    if (i > 0) {
      EXPECT_LE(*curve[i - 1].score, s);
    }
  }
  EXPECT_THROW(ScoreCurve(verdicts, {3, 1}, kTxEvMeth), std::invalid_argument);
}

TEST(CurveTest, IntervalShrinksWithMoreMutants) {
  // Same kill ratio, four times as many mutants: half the width.
  std::vector<KillVerdict> small(10), large(40);
  for (size_t i = 0; i < small.size(); i += 2) small[i].first_step[0] = 0;
  for (size_t i = 0; i < large.size(); i += 2) large[i].first_step[0] = 0;
  double a = ScoreCurve(small, {5}, kConditionTx)[0].ci_half_width;
  double b = ScoreCurve(large, {5}, kConditionTx)[0].ci_half_width;
  EXPECT_NEAR(b, a / 2, 1e-12);
  EXPECT_FALSE(ScoreCurve({}, {5}, kConditionTx)[0].score.has_value());
}

}  // namespace
}  // namespace mutforge
