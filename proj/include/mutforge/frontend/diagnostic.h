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

#ifndef MUTFORGE_FRONTEND_DIAGNOSTIC_H_
#define MUTFORGE_FRONTEND_DIAGNOSTIC_H_

#include <cstdint>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"

namespace mutforge {

// Byte range [begin, end) into the source text, plus the 1-based line and
// column of the first byte.
struct SourceSpan {
  uint32_t line = 0;
  uint32_t column = 0;
  uint32_t begin = 0;
  uint32_t end = 0;

  bool Contains(const SourceSpan& other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool operator==(const SourceSpan&) const = default;
};

enum class Severity { kError, kWarning };

// Stable machine-readable codes. Each semantic failure class has its own code
// so that stillborn mutants can be bucketed by cause.
enum class DiagnosticCode {
  kSyntaxError,
  kUnknownIdentifier,
  kTypeMismatch,
  kMutabilityViolation,
  kDuplicateDeclaration,
  kArityMismatch,
  kInvalidContext,
  kVisibilityViolation,
  kConstantAssignment,
};

const char* DiagnosticCodeName(DiagnosticCode code);

struct Diagnostic {
  Severity severity = Severity::kError;
  DiagnosticCode code = DiagnosticCode::kSyntaxError;
  std::string message;
  std::string file;
  SourceSpan span;
};

using Diagnostics = std::vector<Diagnostic>;

bool HasErrors(const Diagnostics& diagnostics);

// Serializes to a list of {severity, code, message, file, line, col}.
nlohmann::json DiagnosticsToJson(const Diagnostics& diagnostics);

std::string FormatDiagnostic(const Diagnostic& diagnostic);

}  // namespace mutforge

#endif  // MUTFORGE_FRONTEND_DIAGNOSTIC_H_
