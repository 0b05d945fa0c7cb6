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

// Command-line driver: mutate, test, score, and report.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "mutforge/frontend/checker.h"
#include "mutforge/frontend/parser.h"
#include "mutforge/harness/harness.h"
#include "mutforge/harness/replay_test.h"
#include "mutforge/mutation/engine.h"
#include "mutforge/report/campaign.h"

namespace mutforge {
namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCorpus = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

CheckedUnit LoadContract(const std::string& path) {
  std::string file = std::filesystem::path(path).filename().string();
  auto parsed = Parse(ReadText(path), file);
  Diagnostics diagnostics;
  if (auto* errors = std::get_if<Diagnostics>(&parsed)) {
    diagnostics = *errors;
  } else {
    auto checked = Check(std::get<SourceUnit>(std::move(parsed)));
    if (auto* unit = std::get_if<CheckedUnit>(&checked)) {
      return std::move(*unit);
    }
    diagnostics = std::get<Diagnostics>(checked);
  }
  std::string message = path + " is not a valid contract";
  for (const Diagnostic& d : diagnostics) {
    message += "\n" + FormatDiagnostic(d);
  }
  throw CorpusError(message);
}

ReplayTest LoadTest(const std::string& path) {
  try {
    return ReplayTest::Load(path);
  } catch (const TestFormatError& error) {
    throw CorpusError(path + ": " + error.what());
  }
}

struct GenerationOptions {
  uint64_t seed = 0;
  size_t target = 50;
  size_t cap = 1000;

  void Register(CLI::App* command) {
    command->add_option("--seed", seed,
                        "Generation seed (MUTFORGE_SEED overrides)");
    command->add_option("--target", target, "Viable mutants to generate")
        ->check(CLI::PositiveNumber);
    command->add_option("--cap", cap, "Maximum generation attempts")
        ->check(CLI::PositiveNumber);
  }

  GenerationConfig Resolve() const {
    GenerationConfig config;
    config.seed = seed;
    config.target = target;
    config.cap = cap;
    if (const char* env = std::getenv("MUTFORGE_SEED")) {
      try {
        size_t used = 0;
        config.seed = std::stoull(env, &used, 0);
        if (env[used] != '\0') throw std::invalid_argument(env);
      } catch (const std::exception&) {
        throw UsageError(std::string("MUTFORGE_SEED is not a number: ") + env);
      }
    }
    if (config.target > config.cap) {
      throw UsageError("--target must not exceed --cap");
    }
    return config;
  }
};

int RunMutate(const std::string& contract, const GenerationOptions& options,
              bool diff) {
  MutationEngine engine(LoadContract(contract));
  GenerationResult result = engine.Generate(options.Resolve());
  if (diff) {
    for (const Mutant* mutant : result.Viable()) {
      std::cout << "#" << mutant->id << " " << OperatorName(mutant->op)
                << " line " << mutant->Line() << "\n";
      if (mutant->diff) std::cout << mutant->diff->Render();
    }
    return kExitSuccess;
  }
  nlohmann::json mutants = nlohmann::json::array();
  for (const Mutant& mutant : result.mutants) mutants.push_back(mutant.ToJson());
  nlohmann::json out = {{"mutants", mutants},
                        {"stats", result.stats.ToJson()}};
  std::cout << out.dump(2) << "\n";
  return kExitSuccess;
}

int RunTest(const std::string& contract, const std::string& test_path,
            std::optional<size_t> prefix) {
  CheckedUnit unit = LoadContract(contract);
  ReplayTest test = LoadTest(test_path);
  size_t steps = prefix.value_or(test.steps.size());
  if (steps > test.steps.size()) {
    throw UsageError("--prefix exceeds the " +
                     std::to_string(test.steps.size()) + " test steps");
  }
  std::shared_ptr<const Bytecode> code = CompileShared(unit);
  RunTrace trace = ReplayOriginal(code, test, steps);
  std::vector<uint64_t> glr = ReplayLimits(test, trace);
  nlohmann::json records = trace.ToJson();
  for (size_t k = 0; k < records.size(); ++k) records[k]["glr"] = glr[k];
  std::cout << nlohmann::json({{"trace", records}}).dump(2) << "\n";
  return kExitSuccess;
}

int RunScore(const std::string& contract, const std::string& test_path,
             const std::string& conditions_text,
             const GenerationOptions& options) {
  std::optional<ConditionSet> conditions = ParseConditions(conditions_text);
  if (!conditions || *conditions == 0) {
    throw UsageError("--conditions takes a list of tx, ev, meth, limit");
  }
  MutationEngine engine(LoadContract(contract));
  ReplayTest test = LoadTest(test_path);
  RunTrace original =
      ReplayOriginal(engine.original_bytecode(), test, test.steps.size());
  std::vector<uint64_t> glr = ReplayLimits(test, original);
  GenerationResult result = engine.Generate(options.Resolve());

  std::vector<KillVerdict> verdicts;
  nlohmann::json entries = nlohmann::json::array();
  for (const Mutant* mutant : result.Viable()) {
    RunTrace trace = ReplayMutant(mutant->bytecode, *engine.original_bytecode(),
                                  test, glr, test.steps.size());
    KillVerdict verdict = Judge(original, trace, glr, *conditions);
    nlohmann::json entry = verdict.ToJson();
    entry["id"] = mutant->id;
    entries.push_back(entry);
    verdicts.push_back(verdict);
  }
  std::optional<double> score = MutationScore(verdicts, *conditions);
  nlohmann::json out = {
      {"conditions", ConditionSetName(*conditions)},
      {"viable", verdicts.size()},
      {"killed", std::count_if(verdicts.begin(), verdicts.end(),
                               [](const KillVerdict& v) { return v.killed(); })},
      {"score", score ? nlohmann::json(*score) : nlohmann::json()},
      {"generation", result.stats.ToJson()},
      {"verdicts", entries}};
  std::cout << out.dump(2) << "\n";
  return kExitSuccess;
}

int RunReport(const std::string& corpus, const std::string& out_dir,
              size_t workers, const std::string& format_name,
              const GenerationOptions& options) {
  std::optional<ReportFormat> format = ParseReportFormat(format_name);
  if (!format) throw UsageError("unknown format '" + format_name + "'");
  CampaignConfig config;
  config.corpus_dir = corpus;
  config.generation = options.Resolve();
  config.workers = workers;
  CampaignReport report = RunCorpus(config);
  for (const std::string& warning : report.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  std::filesystem::create_directories(out_dir);
  std::filesystem::path path = std::filesystem::path(out_dir) /
                               (std::string("report.") +
                                ReportFormatExtension(*format));
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << RenderReport(report, *format);
  std::cout << path.string() << "\n";
  return kExitSuccess;
}

int Main(int argc, char** argv) {
  CLI::App app{"Mutation testing for MiniSol smart contracts"};
  app.require_subcommand(1);

  GenerationOptions mutate_options;
  std::string mutate_contract;
  bool diff = false;
  CLI::App* mutate = app.add_subcommand("mutate", "Generate mutants");
  mutate->add_option("contract", mutate_contract, "Contract source (.msol)")
      ->required();
  mutate_options.Register(mutate);
  mutate->add_flag("--diff", diff, "Print two-line diffs of viable mutants");

  std::string test_contract;
  std::string test_file;
  std::optional<size_t> prefix;
  CLI::App* test = app.add_subcommand("test", "Replay a test on a contract");
  test->add_option("contract", test_contract, "Contract source")->required();
  test->add_option("test", test_file, "Replay test (.test.json)")->required();
  test->add_option("--prefix", prefix, "Number of steps to replay");

  GenerationOptions score_options;
  std::string score_contract;
  std::string score_test;
  std::string conditions = "tx,ev,meth,limit";
  CLI::App* score = app.add_subcommand("score", "Score a replay test");
  score->add_option("contract", score_contract, "Contract source")->required();
  score->add_option("test", score_test, "Replay test")->required();
  score->add_option("--conditions", conditions, "Killing conditions");
  score_options.Register(score);

  GenerationOptions report_options;
  std::string corpus;
  std::string out_dir;
  size_t workers = 1;
  std::string format = "json";
  CLI::App* report = app.add_subcommand("report", "Run a corpus campaign");
  report->add_option("corpus", corpus, "Corpus directory")->required();
  report->add_option("--out", out_dir, "Output directory")->required();
  report->add_option("--workers", workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  report->add_option("--format", format, "json, csv, or text");
  report_options.Register(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    int code = app.exit(error);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (*mutate) return RunMutate(mutate_contract, mutate_options, diff);
    if (*test) return RunTest(test_contract, test_file, prefix);
    if (*score) {
      return RunScore(score_contract, score_test, conditions, score_options);
    }
    return RunReport(corpus, out_dir, workers, format, report_options);
  } catch (const UsageError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitCorpus;
  }
}

}  // namespace
}  // namespace mutforge

int main(int argc, char** argv) { return mutforge::Main(argc, argv); }
