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

#include "mutforge/frontend/diagnostic.h"

#include <algorithm>
#include <sstream>

namespace mutforge {

const char* DiagnosticCodeName(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::kSyntaxError:
      return "syntax-error";
    case DiagnosticCode::kUnknownIdentifier:
      return "unknown-identifier";
    case DiagnosticCode::kTypeMismatch:
      return "type-mismatch";
    case DiagnosticCode::kMutabilityViolation:
      return "mutability-violation";
    case DiagnosticCode::kDuplicateDeclaration:
      return "duplicate-declaration";
    case DiagnosticCode::kArityMismatch:
      return "arity-mismatch";
    case DiagnosticCode::kInvalidContext:
      return "invalid-context";
    case DiagnosticCode::kVisibilityViolation:
      return "visibility-violation";
    case DiagnosticCode::kConstantAssignment:
      return "constant-assignment";
  }
  return "unknown";
}

bool HasErrors(const Diagnostics& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) {
                       return d.severity == Severity::kError;
                     });
}

nlohmann::json DiagnosticsToJson(const Diagnostics& diagnostics) {
  nlohmann::json result = nlohmann::json::array();
  for (const Diagnostic& d : diagnostics) {
    result.push_back({
        {"severity", d.severity == Severity::kError ? "error" : "warning"},
        {"code", DiagnosticCodeName(d.code)},
        {"message", d.message},
        {"file", d.file},
        {"line", d.span.line},
        {"col", d.span.column},
    });
  }
  return result;
}

std::string FormatDiagnostic(const Diagnostic& diagnostic) {
  std::ostringstream out;
  out << (diagnostic.file.empty() ? "<input>" : diagnostic.file) << ":"
      << diagnostic.span.line << ":" << diagnostic.span.column << ": "
      << (diagnostic.severity == Severity::kError ? "error" : "warning")
      << " [" << DiagnosticCodeName(diagnostic.code)
      << "]: " << diagnostic.message;
  return out.str();
}

}  // namespace mutforge
