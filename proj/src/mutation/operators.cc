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

#include "mutforge/mutation/operators.h"

namespace mutforge {

const char* OperatorName(OperatorCode op) {
  switch (op) {
    case OperatorCode::kAor: return "AOR";
    case OperatorCode::kBor: return "BOR";
    case OperatorCode::kEsd: return "ESD";
    case OperatorCode::kItscr: return "ITSCR";
    case OperatorCode::kJsrd: return "JSRD";
    case OperatorCode::kLrA: return "LR_A";
    case OperatorCode::kLrB: return "LR_B";
    case OperatorCode::kLrI: return "LR_I";
    case OperatorCode::kLrS: return "LR_S";
    case OperatorCode::kMord: return "MORD";
    case OperatorCode::kQrd: return "QRD";
    case OperatorCode::kRar: return "RAR";
    case OperatorCode::kUord: return "UORD";
    case OperatorCode::kVdtscs: return "VDTSCS";
  }
  return "?";
}

std::optional<OperatorCode> ParseOperator(std::string_view name) {
  for (OperatorCode op : kAllOperators) {
    if (name == OperatorName(op)) return op;
  }
  return std::nullopt;
}

const char* OperatorDescription(OperatorCode op) {
  switch (op) {
    case OperatorCode::kAor:
      return "Assignment Operator Replacement";
    case OperatorCode::kBor:
      return "Binary Operator Replacement";
    case OperatorCode::kEsd:
      return "Expression Statement Deletion";
    case OperatorCode::kItscr:
      return "Identifier with same Type, Scope, and Constancy Replacement";
    case OperatorCode::kJsrd:
      return "Jump Statement Replacement/Deletion";
    case OperatorCode::kLrA:
      return "Literal Address Replacement";
    case OperatorCode::kLrB:
      return "Literal Boolean Replacement";
    case OperatorCode::kLrI:
      return "Literal Integer Replacement";
    case OperatorCode::kLrS:
      return "Literal String Replacement";
    case OperatorCode::kMord:
      return "Modifier Replacement/Deletion";
    case OperatorCode::kQrd:
      return "Qualifier Replacement/Deletion";
    case OperatorCode::kRar:
      return "R-Value Address Replacement";
    case OperatorCode::kUord:
      return "Unary Operator Replacement/Deletion";
    case OperatorCode::kVdtscs:
      return "Variable Declaration with same Type, Scope and Constancy Swap";
  }
  return "?";
}

bool IsSoliditySpecific(OperatorCode op) {
  return op == OperatorCode::kLrA || op == OperatorCode::kMord ||
         op == OperatorCode::kQrd || op == OperatorCode::kRar;
}

std::vector<std::string> SwcTags(OperatorCode op) {
  switch (op) {
    case OperatorCode::kAor:
    case OperatorCode::kBor:
    case OperatorCode::kUord:
      return {"SWC-129"};
    case OperatorCode::kItscr:
      return {"SWC-105", "SWC-106"};
    case OperatorCode::kLrA:
    case OperatorCode::kRar:
      return {"SWC-115"};
    case OperatorCode::kMord:
      return {"SWC-105", "SWC-106", "SWC-123"};
    case OperatorCode::kQrd:
      return {"SWC-100", "SWC-108"};
    case OperatorCode::kEsd:
    case OperatorCode::kJsrd:
    case OperatorCode::kLrB:
    case OperatorCode::kLrI:
    case OperatorCode::kLrS:
    case OperatorCode::kVdtscs:
      return {};
  }
  return {};
}

}  // namespace mutforge
