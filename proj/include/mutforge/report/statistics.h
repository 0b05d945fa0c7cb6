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

#ifndef MUTFORGE_REPORT_STATISTICS_H_
#define MUTFORGE_REPORT_STATISTICS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mutforge/mutation/operators.h"
#include "nlohmann/json.hpp"

namespace mutforge {

struct ContingencyRow {
  // Empty for the totals row.
  std::string label;
  size_t not_killed = 0;
  size_t killed = 0;

  size_t total() const { return not_killed + killed; }
  // Percentages of the row total; absent for an empty row.
  std::optional<double> PercentNotKilled() const;
  std::optional<double> PercentKilled() const;
  nlohmann::json ToJson() const;
};

struct ContingencyTable {
  std::vector<ContingencyRow> rows;
  ContingencyRow totals;
  double chi_square = 0;
  size_t df = 0;

  nlohmann::json ToJson() const;
};

// Pearson chi-square over a rows x {not killed, killed} table. Rows with no
// mutants are dropped; df = rows - 1.
ContingencyTable BuildContingencyTable(std::vector<ContingencyRow> rows);

struct OperatorOutcome {
  OperatorCode op;
  bool killed;
};

// One row per operator present, in canonical operator order.
ContingencyTable OperatorContingency(
    const std::vector<OperatorOutcome>& outcomes);

// Tie-corrected Kendall tau-b in O(n log n). Absent when the inputs differ in
// length, hold fewer than two points, or either side is constant.
std::optional<double> KendallTau(const std::vector<double>& xs,
                                 const std::vector<double>& ys);

}  // namespace mutforge

#endif  // MUTFORGE_REPORT_STATISTICS_H_
