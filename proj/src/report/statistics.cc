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

#include "mutforge/report/statistics.h"

#include <algorithm>
#include <cmath>
#include <utility>

namespace mutforge {

namespace {

std::optional<double> Percent(size_t part, size_t total) {
  if (total == 0) return std::nullopt;
  return 100.0 * static_cast<double>(part) / static_cast<double>(total);
}

nlohmann::json OptionalJson(const std::optional<double>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json();
}

// Sum of t(t-1)/2 over runs of equal adjacent elements under `same`.
template <typename It, typename Same>
double TiedPairs(It begin, It end, Same same) {
  double pairs = 0;
  while (begin != end) {
    It run = begin;
    double count = 0;
    while (run != end && same(*begin, *run)) {
      ++run;
      ++count;
    }
    pairs += count * (count - 1) / 2;
    begin = run;
  }
  return pairs;
}

// Stable merge sort on the second component, counting inversions.
double SortCountingSwaps(std::vector<std::pair<double, double>>& values,
                         std::vector<std::pair<double, double>>& scratch,
                         size_t lo, size_t hi) {
  if (hi - lo < 2) return 0;
  size_t mid = lo + (hi - lo) / 2;
  double swaps = SortCountingSwaps(values, scratch, lo, mid) +
                 SortCountingSwaps(values, scratch, mid, hi);
  size_t i = lo;
  size_t j = mid;
  size_t k = lo;
  while (i < mid && j < hi) {
    if (values[j].second < values[i].second) {
      swaps += static_cast<double>(mid - i);
      scratch[k++] = values[j++];
    } else {
      scratch[k++] = values[i++];
    }
  }
  while (i < mid) scratch[k++] = values[i++];
  while (j < hi) scratch[k++] = values[j++];
  std::copy(scratch.begin() + lo, scratch.begin() + hi, values.begin() + lo);
  return swaps;
}

}  // namespace

std::optional<double> ContingencyRow::PercentNotKilled() const {
  return Percent(not_killed, total());
}

std::optional<double> ContingencyRow::PercentKilled() const {
  return Percent(killed, total());
}

nlohmann::json ContingencyRow::ToJson() const {
  return {{"operator", label},
          {"not_killed", not_killed},
          {"killed", killed},
          {"total", total()},
          {"percent_not_killed", OptionalJson(PercentNotKilled())},
          {"percent_killed", OptionalJson(PercentKilled())}};
}

nlohmann::json ContingencyTable::ToJson() const {
  nlohmann::json list = nlohmann::json::array();
  for (const ContingencyRow& row : rows) list.push_back(row.ToJson());
  nlohmann::json total = totals.ToJson();
  total["operator"] = "Total";
  return {{"rows", list},
          {"total", total},
          {"chi_square", chi_square},
          {"df", df}};
}

ContingencyTable BuildContingencyTable(std::vector<ContingencyRow> rows) {
  ContingencyTable table;
  for (ContingencyRow& row : rows) {
    if (row.total() == 0) continue;
    table.totals.not_killed += row.not_killed;
    table.totals.killed += row.killed;
    table.rows.push_back(std::move(row));
  }
  table.df = table.rows.empty() ? 0 : table.rows.size() - 1;
  double n = static_cast<double>(table.totals.total());
  double columns[2] = {static_cast<double>(table.totals.not_killed),
                       static_cast<double>(table.totals.killed)};
  for (const ContingencyRow& row : table.rows) {
    double observed[2] = {static_cast<double>(row.not_killed),
                          static_cast<double>(row.killed)};
    for (int c = 0; c < 2; ++c) {
      double expected = static_cast<double>(row.total()) * columns[c] / n;
      if (expected > 0) {
        double delta = observed[c] - expected;
        table.chi_square += delta * delta / expected;
      }
    }
  }
  return table;
}

ContingencyTable OperatorContingency(
    const std::vector<OperatorOutcome>& outcomes) {
  std::vector<ContingencyRow> rows;
  for (OperatorCode op : kAllOperators) {
    ContingencyRow row;
    row.label = OperatorName(op);
    for (const OperatorOutcome& outcome : outcomes) {
      if (outcome.op != op) continue;
      ++(outcome.killed ? row.killed : row.not_killed);
    }
    rows.push_back(std::move(row));
  }
  return BuildContingencyTable(std::move(rows));
}

std::optional<double> KendallTau(const std::vector<double>& xs,
                                 const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) return std::nullopt;
  std::vector<std::pair<double, double>> points;
  for (size_t i = 0; i < xs.size(); ++i) points.emplace_back(xs[i], ys[i]);
  std::sort(points.begin(), points.end());

  double n = static_cast<double>(points.size());
  double all_pairs = n * (n - 1) / 2;
  double x_ties = TiedPairs(points.begin(), points.end(),
                            [](const auto& a, const auto& b) {
                              return a.first == b.first;
                            });
  double joint_ties =
      TiedPairs(points.begin(), points.end(),
                [](const auto& a, const auto& b) { return a == b; });
  std::vector<std::pair<double, double>> scratch(points.size());
  double swaps = SortCountingSwaps(points, scratch, 0, points.size());
  double y_ties = TiedPairs(points.begin(), points.end(),
                            [](const auto& a, const auto& b) {
                              return a.second == b.second;
                            });

  double denominator = (all_pairs - x_ties) * (all_pairs - y_ties);
  if (denominator <= 0) return std::nullopt;
  double numerator = all_pairs - x_ties - y_ties + joint_ties - 2 * swaps;
  return numerator / std::sqrt(denominator);
}

}  // namespace mutforge
