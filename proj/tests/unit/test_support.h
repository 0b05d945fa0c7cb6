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

#ifndef MUTFORGE_TESTS_UNIT_TEST_SUPPORT_H_
#define MUTFORGE_TESTS_UNIT_TEST_SUPPORT_H_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include "mutforge/frontend/checker.h"
#include "mutforge/frontend/diagnostic.h"
#include "mutforge/frontend/parser.h"

namespace mutforge::testing {

inline std::string SourcePath(const std::string& relative) {
  return std::string(MUTFORGE_SOURCE_DIR) + "/" + relative;
}

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline std::string ReadCorpus(const std::string& name) {
  return ReadFile(SourcePath("corpus/" + name + ".msol"));
}

inline std::string Describe(const Diagnostics& diagnostics) {
  std::string out;
  for (const Diagnostic& d : diagnostics) out += FormatDiagnostic(d) + "\n";
  return out;
}

inline SourceUnit MustParse(const std::string& text) {
  auto result = Parse(text, "test.msol");
  if (auto* diagnostics = std::get_if<Diagnostics>(&result)) {
    throw std::runtime_error("parse failed:\n" + Describe(*diagnostics));
  }
  return std::get<SourceUnit>(std::move(result));
}

inline CheckedUnit MustCheck(const std::string& text) {
  auto result = Check(MustParse(text));
  if (auto* diagnostics = std::get_if<Diagnostics>(&result)) {
    throw std::runtime_error("check failed:\n" + Describe(*diagnostics));
  }
  return std::get<CheckedUnit>(std::move(result));
}

// Diagnostics from parse or check; empty when the text is well formed.
inline Diagnostics CheckDiagnostics(const std::string& text) {
  auto parsed = Parse(text, "test.msol");
  if (auto* diagnostics = std::get_if<Diagnostics>(&parsed)) {
    return *diagnostics;
  }
  auto checked = Check(std::get<SourceUnit>(parsed));
  if (auto* diagnostics = std::get_if<Diagnostics>(&checked)) {
    return *diagnostics;
  }
  return {};
}

}  // namespace mutforge::testing

#endif  // MUTFORGE_TESTS_UNIT_TEST_SUPPORT_H_
