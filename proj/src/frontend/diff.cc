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

#include "mutforge/frontend/diff.h"

#include <sstream>

#include "mutforge/frontend/printer.h"

namespace mutforge {
namespace {

std::vector<std::string> SplitLines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    lines.push_back(line);
  }
  return lines;
}

std::string StripIndent(const std::string& line) {
  size_t first = line.find_first_not_of(' ');
  return first == std::string::npos ? "" : line.substr(first);
}

std::string JoinLines(const std::vector<std::string>& lines) {
  std::string out;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) out += "\n";
    out += lines[i];
  }
  return out;
}

}  // namespace

std::string DiffRecord::OriginalText() const { return JoinLines(removed); }

std::string DiffRecord::MutatedText() const { return JoinLines(added); }

std::string DiffRecord::Render() const {
  std::string out;
  if (removed.empty()) out += "<\n";
  for (const std::string& line : removed) out += "< " + line + "\n";
  if (added.empty()) out += ">\n";
  for (const std::string& line : added) out += "> " + line + "\n";
  return out;
}

DiffRecord DiffText(const std::string& original, const std::string& mutant) {
  std::vector<std::string> a = SplitLines(original);
  std::vector<std::string> b = SplitLines(mutant);
  size_t prefix = 0;
  while (prefix < a.size() && prefix < b.size() && a[prefix] == b[prefix]) {
    ++prefix;
  }
  size_t suffix = 0;
  while (suffix < a.size() - prefix && suffix < b.size() - prefix &&
         a[a.size() - 1 - suffix] == b[b.size() - 1 - suffix]) {
    ++suffix;
  }
  size_t removed_count = a.size() - prefix - suffix;
  size_t added_count = b.size() - prefix - suffix;
  if (removed_count == 0 && added_count == 0) {
    throw DiffError("units are identical");
  }
  if (removed_count == added_count) {
    // Between the first and last differing line every line must differ,
    // otherwise the change touches separate regions.
    for (size_t i = prefix; i < prefix + removed_count; ++i) {
      if (a[i] == b[i]) {
        throw DiffError("units differ in more than one region");
      }
    }
  }
  DiffRecord record;
  record.line = static_cast<uint32_t>(prefix + 1);
  for (size_t i = 0; i < removed_count; ++i) {
    record.removed.push_back(StripIndent(a[prefix + i]));
  }
  for (size_t i = 0; i < added_count; ++i) {
    record.added.push_back(StripIndent(b[prefix + i]));
  }
  return record;
}

DiffRecord Diff(const SourceUnit& original, const SourceUnit& mutant) {
  return DiffText(Print(original), Print(mutant));
}

}  // namespace mutforge
