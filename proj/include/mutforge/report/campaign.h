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

#ifndef MUTFORGE_REPORT_CAMPAIGN_H_
#define MUTFORGE_REPORT_CAMPAIGN_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mutforge/harness/harness.h"
#include "mutforge/mutation/engine.h"
#include "mutforge/report/statistics.h"
#include "nlohmann/json.hpp"

namespace mutforge {

struct CampaignConfig {
  std::string corpus_dir;
  GenerationConfig generation;
  std::vector<ConditionSet> condition_sets = {kConditionTx, kTxEvMeth,
                                              kTxEvMethLimit, kConditionLimit};
  // Curve prefixes; empty means every prefix up to the longest test.
  std::vector<size_t> prefixes;
  size_t workers = 1;
};

struct MutantReport {
  Mutant mutant;
  KillVerdict verdict;
};

struct ContractReport {
  std::string name;
  std::string file;
  // Set when the contract was left out of the campaign.
  std::optional<std::string> excluded;
  GenerationStats stats;
  size_t instructions = 0;
  // Fraction of original instructions executed by the replay test.
  double coverage = 0;
  size_t steps = 0;
  // Viable mutants in id order.
  std::vector<MutantReport> mutants;

  std::vector<KillVerdict> Verdicts() const;
  std::optional<double> Score(ConditionSet conditions) const;
};

struct CampaignReport {
  CampaignConfig config;
  // Sorted by name.
  std::vector<ContractReport> contracts;
  std::vector<std::string> warnings;

  std::vector<KillVerdict> AllVerdicts() const;
  std::optional<double> Score(ConditionSet conditions) const;
  size_t Killed(ConditionSet conditions) const;
  size_t Viable() const;
  // Operator contingency under TxEvMethLimit.
  ContingencyTable Contingency() const;
  std::vector<size_t> CurvePrefixes() const;
  // Rank correlation of bytecode size and TxEvMethLimit score.
  std::optional<double> SizeScoreTau() const;
};

// Contracts are the `*.msol` files of the corpus directory, each paired with
// the `.test.json` file of the same stem.
CampaignReport RunCorpus(const CampaignConfig& config);

// Seed of one contract's generation, derived from the campaign seed.
uint64_t ContractSeed(uint64_t campaign_seed, const std::string& name);

enum class ReportFormat { kJson, kCsv, kText };

std::optional<ReportFormat> ParseReportFormat(std::string_view name);
const char* ReportFormatExtension(ReportFormat format);

nlohmann::json ReportToJson(const CampaignReport& report);
std::string RenderReport(const CampaignReport& report, ReportFormat format);

}  // namespace mutforge

#endif  // MUTFORGE_REPORT_CAMPAIGN_H_
