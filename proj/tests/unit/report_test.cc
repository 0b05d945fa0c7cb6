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

#include "mutforge/report/campaign.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "mutforge/mutation/operators.h"
#include "mutforge/mutation/random.h"
#include "mutforge/report/statistics.h"
#include "unit/test_support.h"

namespace mutforge {
namespace {

using ::mutforge::testing::SourcePath;

struct Counts {
  size_t not_killed;
  size_t killed;
};

// Published per-operator outcomes, in canonical operator order.
constexpr Counts kPublished[] = {
    {2178, 1039}, {3549, 2245}, {5246, 2595}, {7796, 4085}, {1866, 1090},
    {46, 58},     {973, 225},   {1526, 1089}, {158, 329},   {921, 143},
    {1041, 1761}, {3002, 1158}, {297, 189},   {2215, 1050}};

std::vector<ContingencyRow> PublishedRows() {
  std::vector<ContingencyRow> rows;
  for (size_t i = 0; i < kAllOperators.size(); ++i) {
    rows.push_back({OperatorName(kAllOperators[i]), kPublished[i].not_killed,
                    kPublished[i].killed});
  }
  return rows;
}

// N * (sum O^2 / (R C) - 1), an algebraically independent form of Pearson's
// statistic.
double ShortcutChiSquare(const std::vector<ContingencyRow>& rows) {
  double n = 0, c0 = 0, c1 = 0;
  for (const ContingencyRow& row : rows) {
    c0 += row.not_killed;
    c1 += row.killed;
  }
  n = c0 + c1;
  double sum = 0;
  for (const ContingencyRow& row : rows) {
    double r = row.total();
    if (r == 0) continue;
    sum += row.not_killed * row.not_killed / (r * c0) +
           row.killed * row.killed / (r * c1);
  }
  return n * (sum - 1);
}

TEST(ContingencyTest, PublishedTable) {
  ContingencyTable table = BuildContingencyTable(PublishedRows());
  EXPECT_EQ(table.rows.size(), 14u);
  EXPECT_EQ(table.df, 13u);
  EXPECT_NEAR(table.chi_square, 1759.57, 0.5);
  EXPECT_NEAR(table.chi_square, ShortcutChiSquare(PublishedRows()), 1e-6);
  EXPECT_EQ(table.totals.not_killed, 30814u);
  EXPECT_EQ(table.totals.killed, 17056u);
  EXPECT_EQ(table.totals.total(), 47870u);
  EXPECT_NEAR(*table.totals.PercentKilled(), 35.63, 0.005);
  EXPECT_NEAR(*table.rows[10].PercentKilled(), 62.85, 0.005);  // QRD
}

TEST(ContingencyTest, ProportionalRowsGiveZero) {
  ContingencyTable table =
      BuildContingencyTable({{"a", 30, 10}, {"b", 3, 1}, {"c", 300, 100}});
  EXPECT_NEAR(table.chi_square, 0, 1e-9);
  EXPECT_EQ(table.df, 2u);
}

TEST(ContingencyTest, RandomTablesMatchShortcutAndRowSums) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ContingencyRow> rows;
    size_t n = 2 + UniformIndex(rng, 10);
    for (size_t i = 0; i < n; ++i) {
      rows.push_back({"r" + std::to_string(i), UniformIndex(rng, 50) + 1,
                      UniformIndex(rng, 50) + 1});
    }
    ContingencyTable table = BuildContingencyTable(rows);
    EXPECT_NEAR(table.chi_square, ShortcutChiSquare(rows),
                1e-9 * std::max(1.0, table.chi_square));
    EXPECT_GE(table.chi_square, 0);
    size_t not_killed = 0, killed = 0;
    for (const ContingencyRow& row : table.rows) {
      not_killed += row.not_killed;
      killed += row.killed;
      EXPECT_NEAR(*row.PercentKilled() + *row.PercentNotKilled(), 100, 1e-9);
    }
    EXPECT_EQ(table.totals.not_killed, not_killed);
    EXPECT_EQ(table.totals.killed, killed);
  }
}

TEST(ContingencyTest, EmptyRowsAreDropped) {
  ContingencyTable table =
      BuildContingencyTable({{"a", 3, 1}, {"empty", 0, 0}, {"b", 1, 3}});
  ASSERT_EQ(table.rows.size(), 2u);
  EXPECT_EQ(table.df, 1u);
  ContingencyRow empty_row{"x", 0, 0};
  EXPECT_FALSE(empty_row.PercentKilled().has_value());
  ContingencyTable none = BuildContingencyTable({});
  EXPECT_TRUE(none.rows.empty());
  EXPECT_EQ(none.chi_square, 0);
}

TEST(ContingencyTest, OperatorRowsInCanonicalOrder) {
  ContingencyTable table = OperatorContingency({{OperatorCode::kQrd, true},
                                                {OperatorCode::kAor, false},
                                                {OperatorCode::kQrd, false},
                                                {OperatorCode::kAor, false}});
  ASSERT_EQ(table.rows.size(), 2u);
  EXPECT_EQ(table.rows[0].label, "AOR");
  EXPECT_EQ(table.rows[0].not_killed, 2u);
  EXPECT_EQ(table.rows[1].label, "QRD");
  EXPECT_EQ(table.rows[1].killed, 1u);
}

double BruteForceTauB(const std::vector<double>& xs,
                      const std::vector<double>& ys) {
  double concordant = 0, discordant = 0, ties_x = 0, ties_y = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    for (size_t j = i + 1; j < xs.size(); ++j) {
      double dx = xs[i] - xs[j];
      double dy = ys[i] - ys[j];
      if (dx == 0 && dy == 0) continue;
      if (dx == 0) {
        ++ties_x;
      } else if (dy == 0) {
        ++ties_y;
      } else if ((dx > 0) == (dy > 0)) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  return (concordant - discordant) /
         std::sqrt((concordant + discordant + ties_x) *
                   (concordant + discordant + ties_y));
}

TEST(KendallTest, PerfectAgreementAndReversal) {
  std::vector<double> xs = {1, 2, 3, 4, 5};
  EXPECT_NEAR(*KendallTau(xs, {10, 20, 30, 40, 50}), 1, 1e-12);
  EXPECT_NEAR(*KendallTau(xs, {5, 4, 3, 2, 1}), -1, 1e-12);
}

TEST(KendallTest, MatchesQuadraticOracleWithTies) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    size_t n = 2 + UniformIndex(rng, 60);
    std::vector<double> xs(n), ys(n);
    for (size_t i = 0; i < n; ++i) {
      xs[i] = static_cast<double>(UniformIndex(rng, 6));
      ys[i] = static_cast<double>(UniformIndex(rng, 6));
    }
    auto tau = KendallTau(xs, ys);
    double oracle = BruteForceTauB(xs, ys);
    if (std::isnan(oracle) || std::isinf(oracle)) {
      EXPECT_FALSE(tau.has_value());
    } else {
      ASSERT_TRUE(tau.has_value());
      EXPECT_NEAR(*tau, oracle, 1e-12);
      EXPECT_LE(std::abs(*tau), 1 + 1e-12);
    }
  }
}

TEST(KendallTest, DegenerateInputs) {
  EXPECT_FALSE(KendallTau({1, 1, 1}, {1, 2, 3}).has_value());
  EXPECT_FALSE(KendallTau({1}, {1}).has_value());
  EXPECT_FALSE(KendallTau({1, 2}, {1, 2, 3}).has_value());
}

CampaignConfig SmallCampaign(size_t workers) {
  CampaignConfig config;
  config.corpus_dir = SourcePath("corpus");
  config.generation.target = 15;
  config.generation.seed = 4;
  config.workers = workers;
  return config;
}

class CampaignTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    single_ = new CampaignReport(RunCorpus(SmallCampaign(1)));
    parallel_ = new CampaignReport(RunCorpus(SmallCampaign(8)));
  }
  static void TearDownTestSuite() {
    delete single_;
    delete parallel_;
  }
  static CampaignReport* single_;
  static CampaignReport* parallel_;
};

CampaignReport* CampaignTest::single_ = nullptr;
CampaignReport* CampaignTest::parallel_ = nullptr;

TEST_F(CampaignTest, WorkerCountDoesNotChangeOutput) {
  for (ReportFormat format :
       {ReportFormat::kJson, ReportFormat::kCsv, ReportFormat::kText}) {
    EXPECT_EQ(RenderReport(*single_, format), RenderReport(*parallel_, format));
  }
}

TEST_F(CampaignTest, CoversTheCorpus) {
  const CampaignReport& report = *single_;
  ASSERT_EQ(report.contracts.size(), 6u);
  EXPECT_TRUE(report.warnings.empty());
  EXPECT_TRUE(std::is_sorted(
      report.contracts.begin(), report.contracts.end(),
      [](const auto& a, const auto& b) { return a.name < b.name; }));
  for (const ContractReport& contract : report.contracts) {
    EXPECT_FALSE(contract.excluded.has_value()) << contract.name;
    EXPECT_EQ(contract.mutants.size(), 15u) << contract.name;
    EXPECT_GT(contract.coverage, 0.5) << contract.name;
    EXPECT_LE(contract.coverage, 1.0) << contract.name;
  }
  EXPECT_EQ(report.Viable(), 90u);
}

TEST_F(CampaignTest, AggregateIsTheSumOfContracts) {
  const CampaignReport& report = *single_;
  for (ConditionSet conditions : report.config.condition_sets) {
    size_t killed = 0, viable = 0;
    for (const ContractReport& contract : report.contracts) {
      for (const MutantReport& m : contract.mutants) {
        ++viable;
        killed += m.verdict.KilledBy(conditions) ? 1 : 0;
      }
    }
    EXPECT_EQ(report.Killed(conditions), killed);
    EXPECT_NEAR(*report.Score(conditions),
                static_cast<double>(killed) / viable, 1e-12);
  }
  EXPECT_LE(report.Killed(kConditionTx), report.Killed(kTxEvMeth));
  EXPECT_LE(report.Killed(kTxEvMeth), report.Killed(kTxEvMethLimit));
  EXPECT_LE(report.Killed(kConditionLimit), report.Killed(kTxEvMethLimit));
}

TEST_F(CampaignTest, ContingencyRecomputes) {
  ContingencyTable table = single_->Contingency();
  EXPECT_EQ(table.totals.total(), single_->Viable());
  EXPECT_EQ(table.totals.killed, single_->Killed(kTxEvMethLimit));
  EXPECT_NEAR(table.chi_square, ShortcutChiSquare(table.rows), 1e-9);
  EXPECT_EQ(table.df, table.rows.size() - 1);
}

TEST_F(CampaignTest, JsonAgreesWithCsv) {
  nlohmann::json json = ReportToJson(*single_);
  for (const char* key : {"config", "contracts", "aggregate", "warnings"}) {
    EXPECT_TRUE(json.contains(key)) << key;
  }
  std::istringstream csv(RenderReport(*single_, ReportFormat::kCsv));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "operator,not_killed,killed,total,percent_not_killed,"
                  "percent_killed");
  const nlohmann::json& rows = json["aggregate"]["contingency"]["rows"];
  size_t index = 0;
  while (std::getline(csv, line)) {
    std::vector<std::string> cells;
    std::stringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    ASSERT_GE(cells.size(), 4u);
    const nlohmann::json& row = index < rows.size()
                                    ? rows[index]
                                    : json["aggregate"]["contingency"]["total"];
    EXPECT_EQ(cells[0], row["operator"].get<std::string>());
    EXPECT_EQ(std::stoul(cells[1]), row["not_killed"].get<size_t>());
    EXPECT_EQ(std::stoul(cells[2]), row["killed"].get<size_t>());
    ++index;
  }
  EXPECT_EQ(index, rows.size() + 1);
  size_t mutants = 0;
  for (const auto& contract : json["contracts"]) {
    mutants += contract["mutants"].size();
  }
  EXPECT_EQ(mutants, single_->Viable());
}

TEST_F(CampaignTest, TextShowsEveryDiff) {
  std::string text = RenderReport(*single_, ReportFormat::kText);
  for (const ContractReport& contract : single_->contracts) {
    EXPECT_NE(text.find(contract.name), std::string::npos);
    for (const MutantReport& m : contract.mutants) {
      ASSERT_TRUE(m.mutant.diff.has_value());
      std::string rendered = m.mutant.diff->Render();
      std::string first_line = rendered.substr(0, rendered.find('\n'));
      EXPECT_NE(text.find(first_line), std::string::npos) << first_line;
    }
  }
}

TEST_F(CampaignTest, CurveIsMonotone) {
  nlohmann::json curves = ReportToJson(*single_)["aggregate"]["curves"];
  ASSERT_FALSE(curves.empty());
  for (const auto& [name, points] : curves.items()) {
    double last = 0;
    for (const auto& point : points) {
      double score = point["score"].get<double>();
      EXPECT_GE(score, last) << name;
      last = score;
    }
  }
}

TEST(CampaignErrorsTest, EmptyAndMissingCorpus) {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "mutforge_empty_corpus";
  std::filesystem::create_directories(dir);
  CampaignConfig config;
  config.corpus_dir = dir.string();
  CampaignReport report = RunCorpus(config);
  EXPECT_TRUE(report.contracts.empty());
  EXPECT_EQ(report.warnings, std::vector<std::string>{"corpus is empty"});
  EXPECT_FALSE(report.Score(kTxEvMeth).has_value());
  for (ReportFormat format :
       {ReportFormat::kJson, ReportFormat::kCsv, ReportFormat::kText}) {
    EXPECT_FALSE(RenderReport(report, format).empty());
  }
  EXPECT_NO_THROW(
      nlohmann::json::parse(RenderReport(report, ReportFormat::kJson)));

  config.corpus_dir = (dir / "missing").string();
  EXPECT_THROW(RunCorpus(config), CorpusError);
  config.corpus_dir = dir.string();
  config.condition_sets.clear();
  EXPECT_THROW(RunCorpus(config), std::invalid_argument);
}

TEST(CampaignErrorsTest, UnpairedContractIsExcluded) {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "mutforge_unpaired_corpus";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::filesystem::copy_file(SourcePath("corpus/token.msol"),
                             dir / "token.msol");
  CampaignConfig config;
  config.corpus_dir = dir.string();
  config.generation.target = 3;
  CampaignReport report = RunCorpus(config);
  ASSERT_EQ(report.contracts.size(), 1u);
  EXPECT_TRUE(report.contracts[0].excluded.has_value());
  EXPECT_FALSE(report.warnings.empty());
  EXPECT_EQ(report.Viable(), 0u);
}

TEST(ReportFormatTest, NamesAndExtensions) {
  EXPECT_EQ(ParseReportFormat("json"), std::optional(ReportFormat::kJson));
  EXPECT_EQ(ParseReportFormat("csv"), std::optional(ReportFormat::kCsv));
  EXPECT_EQ(ParseReportFormat("text"), std::optional(ReportFormat::kText));
  EXPECT_FALSE(ParseReportFormat("xml").has_value());
  EXPECT_STREQ(ReportFormatExtension(ReportFormat::kText), "txt");
  EXPECT_NE(ContractSeed(1, "a"), ContractSeed(1, "b"));
  EXPECT_NE(ContractSeed(1, "a"), ContractSeed(2, "a"));
}

}  // namespace
}  // namespace mutforge
