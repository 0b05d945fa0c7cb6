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
#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <variant>

#include "mutforge/frontend/checker.h"
#include "mutforge/frontend/parser.h"
#include "mutforge/mutation/random.h"

namespace mutforge {

namespace {

namespace fs = std::filesystem;

// Runs fn(0..count-1) on `workers` threads. The first exception is rethrown.
template <typename Fn>
void ParallelFor(size_t count, size_t workers, Fn fn) {
  workers = std::max<size_t>(1, std::min(workers, count));
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (size_t i = 0; i < workers; ++i) threads.emplace_back(work);
    for (std::thread& thread : threads) thread.join();
  }
  if (failure) std::rethrow_exception(failure);
}

std::string ReadText(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string FirstDiagnostic(const Diagnostics& diagnostics) {
  return diagnostics.empty() ? std::string("unknown error")
                             : FormatDiagnostic(diagnostics.front());
}

struct PreparedContract {
  ContractReport report;
  fs::path source_path;
  fs::path test_path;
  std::shared_ptr<const Bytecode> original;
  ReplayTest test;
  RunTrace original_trace;
  std::vector<uint64_t> glr;
  std::vector<std::string> warnings;
  GenerationResult generation;
};

void Prepare(PreparedContract& contract, uint64_t campaign_seed,
             const GenerationConfig& generation) {
  ContractReport& report = contract.report;
  auto parsed = Parse(ReadText(contract.source_path), report.file);
  if (auto* diagnostics = std::get_if<Diagnostics>(&parsed)) {
    throw CorpusError("parse failed: " + FirstDiagnostic(*diagnostics));
  }
  auto checked = Check(std::get<SourceUnit>(std::move(parsed)));
  if (auto* diagnostics = std::get_if<Diagnostics>(&checked)) {
    throw CorpusError("check failed: " + FirstDiagnostic(*diagnostics));
  }
  if (!fs::exists(contract.test_path)) {
    throw CorpusError("missing replay test " +
                      contract.test_path.filename().string());
  }
  contract.test = ReplayTest::Load(contract.test_path.string());

  MutationEngine engine(std::get<CheckedUnit>(std::move(checked)));
  contract.original = engine.original_bytecode();
  report.instructions = contract.original->instructions.size();
  report.steps = contract.test.steps.size();
  contract.original_trace = ReplayOriginal(contract.original, contract.test,
                                           contract.test.steps.size());
  contract.glr = ReplayLimits(contract.test, contract.original_trace);
  for (size_t k = 0; k <= contract.test.steps.size(); ++k) {
    uint64_t guh = k == 0 ? contract.test.deployment.guh
                          : contract.test.steps[k - 1].guh;
    if (guh == 0) {
      contract.warnings.push_back(report.name + ": record " +
                                  std::to_string(k) +
                                  " has zero historic gas used; glr = glh");
    }
  }

  std::vector<uint32_t> executed;
  for (const StepRecord& step : contract.original_trace.steps) {
    executed.insert(executed.end(), step.outcome.trace.begin(),
                    step.outcome.trace.end());
  }
  std::sort(executed.begin(), executed.end());
  executed.erase(std::unique(executed.begin(), executed.end()),
                 executed.end());
  report.coverage = Coverage(executed, *contract.original);

  GenerationConfig config = generation;
  config.seed = ContractSeed(campaign_seed, report.name);
  contract.generation = engine.Generate(config);
  report.stats = contract.generation.stats;
}

nlohmann::json OptionalJson(const std::optional<double>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json();
}

std::string FormatPercent(const std::optional<double>& value) {
  if (!value) return "";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.1f", *value);
  return buffer;
}

std::string FormatScore(const std::optional<double>& score) {
  if (!score) return "n/a";
  return FormatPercent(*score * 100) + "%";
}

}  // namespace

std::vector<KillVerdict> ContractReport::Verdicts() const {
  std::vector<KillVerdict> verdicts;
  for (const MutantReport& mutant : mutants) verdicts.push_back(mutant.verdict);
  return verdicts;
}

std::optional<double> ContractReport::Score(ConditionSet conditions) const {
  return MutationScore(Verdicts(), conditions);
}

std::vector<KillVerdict> CampaignReport::AllVerdicts() const {
  std::vector<KillVerdict> verdicts;
  for (const ContractReport& contract : contracts) {
    for (const MutantReport& mutant : contract.mutants) {
      verdicts.push_back(mutant.verdict);
    }
  }
  return verdicts;
}

std::optional<double> CampaignReport::Score(ConditionSet conditions) const {
  return MutationScore(AllVerdicts(), conditions);
}

size_t CampaignReport::Killed(ConditionSet conditions) const {
  size_t killed = 0;
  for (const KillVerdict& verdict : AllVerdicts()) {
    if (verdict.KilledBy(conditions)) ++killed;
  }
  return killed;
}

size_t CampaignReport::Viable() const { return AllVerdicts().size(); }

ContingencyTable CampaignReport::Contingency() const {
  std::vector<OperatorOutcome> outcomes;
  for (const ContractReport& contract : contracts) {
    for (const MutantReport& mutant : contract.mutants) {
      outcomes.push_back(
          {mutant.mutant.op, mutant.verdict.KilledBy(kTxEvMethLimit)});
    }
  }
  return OperatorContingency(outcomes);
}

std::vector<size_t> CampaignReport::CurvePrefixes() const {
  if (!config.prefixes.empty()) return config.prefixes;
  size_t longest = 0;
  for (const ContractReport& contract : contracts) {
    if (!contract.excluded) longest = std::max(longest, contract.steps);
  }
  std::vector<size_t> prefixes;
  for (size_t p = 0; p <= longest; ++p) prefixes.push_back(p);
  return prefixes;
}

std::optional<double> CampaignReport::SizeScoreTau() const {
  std::vector<double> sizes;
  std::vector<double> scores;
  for (const ContractReport& contract : contracts) {
    std::optional<double> score = contract.Score(kTxEvMethLimit);
    if (contract.excluded || !score) continue;
    sizes.push_back(static_cast<double>(contract.instructions));
    scores.push_back(*score);
  }
  return KendallTau(sizes, scores);
}

uint64_t ContractSeed(uint64_t campaign_seed, const std::string& name) {
  uint64_t state = campaign_seed ^ Fnv1a(name);
  return SplitMix64(state);
}

CampaignReport RunCorpus(const CampaignConfig& config) {
  if (config.condition_sets.empty()) {
    throw std::invalid_argument("at least one condition set is required");
  }
  fs::path directory(config.corpus_dir);
  if (!fs::is_directory(directory)) {
    throw CorpusError("corpus directory " + config.corpus_dir +
                      " does not exist");
  }
  std::vector<fs::path> sources;
  for (const fs::directory_entry& entry : fs::directory_iterator(directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".msol") {
      sources.push_back(entry.path());
    }
  }
  std::sort(sources.begin(), sources.end());

  CampaignReport report;
  report.config = config;
  if (sources.empty()) report.warnings.push_back("corpus is empty");

  std::vector<PreparedContract> prepared(sources.size());
  for (size_t i = 0; i < sources.size(); ++i) {
    PreparedContract& contract = prepared[i];
    contract.source_path = sources[i];
    contract.test_path = sources[i];
    contract.test_path.replace_extension(".test.json");
    contract.report.name = sources[i].stem().string();
    contract.report.file = sources[i].filename().string();
  }
  ParallelFor(prepared.size(), config.workers, [&](size_t i) {
    try {
      Prepare(prepared[i], config.generation.seed, config.generation);
    } catch (const std::exception& error) {
      prepared[i].report.excluded = error.what();
    }
  });

  struct Unit {
    size_t contract;
    const Mutant* mutant;
  };
  std::vector<Unit> units;
  for (size_t i = 0; i < prepared.size(); ++i) {
    if (prepared[i].report.excluded) continue;
    for (const Mutant* mutant : prepared[i].generation.Viable()) {
      units.push_back({i, mutant});
    }
  }
  std::vector<KillVerdict> verdicts(units.size());
  ParallelFor(units.size(), config.workers, [&](size_t u) {
    const PreparedContract& contract = prepared[units[u].contract];
    RunTrace trace = ReplayMutant(units[u].mutant->bytecode,
                                  *contract.original, contract.test,
                                  contract.glr, contract.test.steps.size());
    verdicts[u] = Judge(contract.original_trace, trace, contract.glr,
                        kTxEvMethLimit);
  });

  for (size_t u = 0; u < units.size(); ++u) {
    prepared[units[u].contract].report.mutants.push_back(
        {*units[u].mutant, verdicts[u]});
  }
  for (PreparedContract& contract : prepared) {
    if (contract.report.excluded) {
      report.warnings.push_back(contract.report.name + " excluded: " +
                                *contract.report.excluded);
    }
    report.warnings.insert(report.warnings.end(), contract.warnings.begin(),
                           contract.warnings.end());
    report.contracts.push_back(std::move(contract.report));
  }
  return report;
}

std::optional<ReportFormat> ParseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "text") return ReportFormat::kText;
  return std::nullopt;
}

const char* ReportFormatExtension(ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson:
      return "json";
    case ReportFormat::kCsv:
      return "csv";
    case ReportFormat::kText:
      return "txt";
  }
  return "txt";
}

nlohmann::json ReportToJson(const CampaignReport& report) {
  const CampaignConfig& config = report.config;
  nlohmann::json condition_names = nlohmann::json::array();
  for (ConditionSet set : config.condition_sets) {
    condition_names.push_back(ConditionSetName(set));
  }
  std::vector<size_t> prefixes = report.CurvePrefixes();

  nlohmann::json contracts = nlohmann::json::array();
  for (const ContractReport& contract : report.contracts) {
    nlohmann::json scores = nlohmann::json::object();
    for (ConditionSet set : config.condition_sets) {
      scores[ConditionSetName(set)] = OptionalJson(contract.Score(set));
    }
    nlohmann::json mutants = nlohmann::json::array();
    for (const MutantReport& entry : contract.mutants) {
      nlohmann::json verdict = entry.verdict.ToJson();
      verdict["id"] = entry.mutant.id;
      nlohmann::json mutant = entry.mutant.ToJson();
      mutant["verdict"] = verdict;
      mutants.push_back(mutant);
    }
    contracts.push_back(
        {{"name", contract.name},
         {"file", contract.file},
         {"excluded", contract.excluded ? nlohmann::json(*contract.excluded)
                                        : nlohmann::json()},
         {"generation", contract.stats.ToJson()},
         {"instructions", contract.instructions},
         {"coverage", contract.coverage},
         {"steps", contract.steps},
         {"scores", scores},
         {"mutants", mutants}});
  }

  std::vector<KillVerdict> verdicts = report.AllVerdicts();
  nlohmann::json scores = nlohmann::json::object();
  nlohmann::json curves = nlohmann::json::object();
  for (ConditionSet set : config.condition_sets) {
    std::string name = ConditionSetName(set);
    scores[name] = {{"killed", report.Killed(set)},
                    {"score", OptionalJson(report.Score(set))}};
    nlohmann::json curve = nlohmann::json::array();
    for (const CurvePoint& point : ScoreCurve(verdicts, prefixes, set)) {
      curve.push_back({{"prefix", point.prefix},
                       {"score", OptionalJson(point.score)},
                       {"ci_half_width", point.ci_half_width}});
    }
    curves[name] = curve;
  }
  GenerationStats totals;
  for (const ContractReport& contract : report.contracts) {
    totals.attempts += contract.stats.attempts;
    totals.stillborn += contract.stats.stillborn;
    totals.duplicate += contract.stats.duplicate;
    totals.viable += contract.stats.viable;
    totals.exhausted = totals.exhausted || contract.stats.exhausted;
  }

  return {{"config",
           {{"seed", config.generation.seed},
            {"target", config.generation.target},
            {"cap", config.generation.cap},
            {"conditions", condition_names},
            {"prefixes", prefixes}}},
          {"contracts", contracts},
          {"aggregate",
           {{"generation", totals.ToJson()},
            {"viable", verdicts.size()},
            {"scores", scores},
            {"curves", curves},
            {"contingency", report.Contingency().ToJson()},
            {"kendall_tau_size_score", OptionalJson(report.SizeScoreTau())}}},
          {"warnings", report.warnings}};
}

namespace {

std::string RenderCsv(const CampaignReport& report) {
  ContingencyTable table = report.Contingency();
  std::ostringstream out;
  out << "operator,not_killed,killed,total,percent_not_killed,percent_killed\n";
  auto row = [&](const std::string& label, const ContingencyRow& r) {
    out << label << "," << r.not_killed << "," << r.killed << "," << r.total()
        << "," << FormatPercent(r.PercentNotKilled()) << ","
        << FormatPercent(r.PercentKilled()) << "\n";
  };
  for (const ContingencyRow& r : table.rows) row(r.label, r);
  row("Total", table.totals);
  return out.str();
}

std::string Indent(const std::string& text) {
  std::string out;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    out += "    " + line + "\n";
  }
  return out;
}

std::string RenderText(const CampaignReport& report) {
  std::ostringstream out;
  out << "mutforge report (seed " << report.config.generation.seed << ")\n";
  for (const std::string& warning : report.warnings) {
    out << "warning: " << warning << "\n";
  }
  for (const ContractReport& contract : report.contracts) {
    out << "\n== " << contract.name << " (" << contract.file << ")\n";
    if (contract.excluded) {
      out << "excluded: " << *contract.excluded << "\n";
      continue;
    }
    const GenerationStats& stats = contract.stats;
    out << "attempts " << stats.attempts << ", stillborn " << stats.stillborn
        << ", duplicate " << stats.duplicate << ", viable " << stats.viable
        << (stats.exhausted ? " (exhausted)" : "") << "\n";
    for (ConditionSet set : report.config.condition_sets) {
      out << ConditionSetName(set) << ": " << FormatScore(contract.Score(set))
          << "\n";
    }
    for (const MutantReport& entry : contract.mutants) {
      const KillVerdict& verdict = entry.verdict;
      out << "#" << entry.mutant.id << " " << OperatorName(entry.mutant.op)
          << " line " << entry.mutant.Line() << ": ";
      if (verdict.killed()) {
        out << "killed by " << ConditionSetName(verdict.triggered())
            << " at step " << *verdict.first_kill() << "\n";
      } else {
        out << "survived\n";
      }
      if (entry.mutant.diff) out << Indent(entry.mutant.diff->Render());
    }
  }
  out << "\n== aggregate\n";
  out << "viable " << report.Viable() << "\n";
  for (ConditionSet set : report.config.condition_sets) {
    out << ConditionSetName(set) << ": " << report.Killed(set) << " killed, "
        << FormatScore(report.Score(set)) << "\n";
  }
  ContingencyTable table = report.Contingency();
  out << "chi-square " << table.chi_square << ", df " << table.df << "\n";
  std::optional<double> tau = report.SizeScoreTau();
  out << "kendall tau (size, score) "
      << (tau ? std::to_string(*tau) : std::string("n/a")) << "\n";
  return out.str();
}

}  // namespace

std::string RenderReport(const CampaignReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson:
      return ReportToJson(report).dump(2) + "\n";
    case ReportFormat::kCsv:
      return RenderCsv(report);
    case ReportFormat::kText:
      return RenderText(report);
  }
  return "";
}

}  // namespace mutforge
