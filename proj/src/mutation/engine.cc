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

#include "mutforge/mutation/engine.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <variant>

#include "mutation/sites.h"
#include "mutforge/compiler/compiler.h"
#include "mutforge/frontend/parser.h"
#include "mutforge/frontend/printer.h"

namespace mutforge {

using internal::Site;
using internal::SiteKind;

const char* ClassificationName(Classification classification) {
  switch (classification) {
    case Classification::kStillborn:
      return "stillborn";
    case Classification::kDuplicate:
      return "duplicate";
    case Classification::kViable:
      return "viable";
  }
  return "?";
}

uint32_t Mutant::Line() const { return diff ? diff->line : span.line; }

std::string Mutant::OriginalText() const {
  return diff ? diff->OriginalText() : std::string();
}

std::string Mutant::MutatedText() const {
  return diff ? diff->MutatedText() : std::string();
}

nlohmann::json Mutant::ToJson() const {
  nlohmann::json json = {{"id", id},
                         {"operator", OperatorName(op)},
                         {"swc_tags", SwcTags(op)},
                         {"file", file},
                         {"line", Line()},
                         {"original", OriginalText()},
                         {"mutated", MutatedText()},
                         {"classification", ClassificationName(classification)}};
  if (fingerprint) json["fingerprint"] = DigestHex(*fingerprint);
  return json;
}

nlohmann::json GenerationStats::ToJson() const {
  return {{"attempts", attempts},
          {"stillborn", stillborn},
          {"duplicate", duplicate},
          {"viable", viable},
          {"exhausted", exhausted}};
}

std::vector<const Mutant*> GenerationResult::Viable() const {
  std::vector<const Mutant*> viable;
  for (const Mutant& mutant : mutants) {
    if (mutant.classification == Classification::kViable) {
      viable.push_back(&mutant);
    }
  }
  return viable;
}

std::shared_ptr<const Bytecode> CompileShared(const CheckedUnit& unit) {
  return std::make_shared<const Bytecode>(Compile(unit, 0));
}

namespace {

Mutant ClassifyPrinted(const MutationAttempt& attempt,
                       const std::string& original_text,
                       const std::string& file,
                       const Digest& original_fingerprint,
                       std::set<Digest>& seen, uint32_t id) {
  Mutant mutant;
  mutant.id = id;
  mutant.op = attempt.op;
  mutant.candidate = attempt.candidate;
  mutant.replacement = attempt.replacement;
  mutant.span = attempt.span;
  mutant.file = file;
  mutant.source = Print(attempt.unit);
  try {
    mutant.diff = DiffText(original_text, mutant.source);
  } catch (const DiffError&) {
    mutant.diff.reset();
  }
  auto parsed = Parse(mutant.source, file);
  if (auto* diagnostics = std::get_if<Diagnostics>(&parsed)) {
    mutant.classification = Classification::kStillborn;
    mutant.diagnostics = std::move(*diagnostics);
    return mutant;
  }
  auto checked = Check(std::get<SourceUnit>(parsed));
  if (auto* diagnostics = std::get_if<Diagnostics>(&checked)) {
    mutant.classification = Classification::kStillborn;
    mutant.diagnostics = std::move(*diagnostics);
    return mutant;
  }
  mutant.bytecode = CompileShared(std::get<CheckedUnit>(checked));
  Digest digest = Fingerprint(*mutant.bytecode);
  mutant.fingerprint = digest;
  if (digest == original_fingerprint || seen.count(digest) > 0) {
    mutant.classification = Classification::kDuplicate;
  } else {
    mutant.classification = Classification::kViable;
    seen.insert(digest);
  }
  return mutant;
}

const char* SiteKindName(SiteKind kind) {
  switch (kind) {
    case SiteKind::kLiteral: return "literal";
    case SiteKind::kIdentifier: return "identifier";
    case SiteKind::kIndex: return "index";
    case SiteKind::kBuiltin: return "builtin";
    case SiteKind::kBinary: return "binary";
    case SiteKind::kUnary: return "unary";
    case SiteKind::kStatement: return "statement";
    case SiteKind::kParameter: return "parameter";
    case SiteKind::kModifierInvocation: return "modifier-invocation";
    case SiteKind::kVisibility: return "visibility";
    case SiteKind::kMutability: return "mutability";
  }
  return "?";
}

}  // namespace

Mutant Classify(const MutationAttempt& attempt, const SourceUnit& original,
                const Digest& original_fingerprint, std::set<Digest>& seen,
                uint32_t id) {
  return ClassifyPrinted(attempt, Print(original), original.file,
                         original_fingerprint, seen, id);
}

// ---- replacement pools ----

using Edit = std::function<void(Site&)>;

struct MutationEngine::Pools {
  // Candidate index -> enumerated site index.
  std::vector<size_t> site_of;
  // Candidate index -> operator -> edits.
  std::vector<std::map<OperatorCode, std::vector<Edit>>> edits;
  std::string original_text;
};

namespace {

const std::vector<BinaryOp>& BinaryCategory(BinaryOp op) {
  static const std::vector<BinaryOp> kArithmetic = {
      BinaryOp::kAdd, BinaryOp::kSub, BinaryOp::kMul, BinaryOp::kDiv,
      BinaryOp::kMod};
  static const std::vector<BinaryOp> kRelational = {
      BinaryOp::kLt, BinaryOp::kLe, BinaryOp::kGt,
      BinaryOp::kGe, BinaryOp::kEq, BinaryOp::kNe};
  static const std::vector<BinaryOp> kLogical = {BinaryOp::kAnd,
                                                 BinaryOp::kOr};
  switch (op) {
    case BinaryOp::kAdd:
    case BinaryOp::kSub:
    case BinaryOp::kMul:
    case BinaryOp::kDiv:
    case BinaryOp::kMod:
      return kArithmetic;
    case BinaryOp::kAnd:
    case BinaryOp::kOr:
      return kLogical;
    default:
      return kRelational;
  }
}

Expr Identifier(const std::string& name) {
  Expr expr;
  expr.kind = ExprKind::kIdentifier;
  expr.name = name;
  return expr;
}

Expr BuiltinExpr(Builtin builtin) {
  Expr expr;
  expr.kind = ExprKind::kBuiltin;
  expr.builtin = builtin;
  return expr;
}

Expr AddressLiteral(uint64_t value) {
  Expr expr;
  expr.kind = ExprKind::kAddressLiteral;
  expr.int_value = value;
  return expr;
}

Edit ReplaceExpr(Expr replacement) {
  return [replacement](Site& site) {
    SourceSpan span = site.expr->span;
    *site.expr = replacement;
    site.expr->span = span;
  };
}

Edit SetStmt(StmtKind kind) {
  return [kind](Site& site) {
    Stmt& stmt = site.stmt();
    stmt.kind = kind;
    stmt.exprs.clear();
  };
}

Edit DeleteStmt() {
  return [](Site& site) {
    site.block->erase(site.block->begin() +
                      static_cast<std::ptrdiff_t>(site.index));
  };
}

class PoolBuilder {
 public:
  PoolBuilder(const CheckedUnit& unit, std::vector<Site>& sites)
      : contract_(unit.unit.contracts.at(0)),
        symbols_(unit.contracts.at(0)),
        sites_(sites) {
    // Address expressions that RAR may substitute, in canonical order.
    rar_templates_.push_back(BuiltinExpr(Builtin::kMsgSender));
    rar_templates_.push_back(BuiltinExpr(Builtin::kTxOrigin));
    for (const StateVarDecl& var : contract_.state_vars) {
      if (var.type == Type::Address()) {
        rar_templates_.push_back(Identifier(var.name));
      }
    }
    for (const Site& site : sites_) {
      if (site.kind == SiteKind::kLiteral &&
          site.expr->kind == ExprKind::kAddressLiteral &&
          std::find(address_literals_.begin(), address_literals_.end(),
                    site.expr->int_value) == address_literals_.end()) {
        address_literals_.push_back(site.expr->int_value);
      }
    }
    for (uint64_t literal : address_literals_) {
      rar_templates_.push_back(AddressLiteral(literal));
    }
  }

  std::map<OperatorCode, std::vector<Edit>> Build(const Site& site,
                                                  std::string* identifier_class) {
    std::map<OperatorCode, std::vector<Edit>> pools;
    auto add = [&pools](OperatorCode op, std::vector<Edit> edits) {
      if (!edits.empty()) pools[op] = std::move(edits);
    };
    switch (site.kind) {
      case SiteKind::kLiteral:
        LiteralPools(site, add);
        break;
      case SiteKind::kIdentifier:
        add(OperatorCode::kItscr, IdentifierPool(site, identifier_class));
        if (!site.is_lvalue && site.expr->type == Type::Address()) {
          add(OperatorCode::kRar, RarPool(*site.expr));
        }
        break;
      case SiteKind::kIndex:
        add(OperatorCode::kItscr, MappingPool(site, identifier_class));
        break;
      case SiteKind::kBuiltin:
        if (!site.is_lvalue && (site.expr->builtin == Builtin::kMsgSender ||
                                site.expr->builtin == Builtin::kTxOrigin)) {
          add(OperatorCode::kRar, RarPool(*site.expr));
        }
        break;
      case SiteKind::kBinary: {
        std::vector<Edit> edits;
        for (BinaryOp op : BinaryCategory(site.expr->binary_op)) {
          if (op == site.expr->binary_op) continue;
          edits.push_back([op](Site& s) { s.expr->binary_op = op; });
        }
        add(OperatorCode::kBor, std::move(edits));
        break;
      }
      case SiteKind::kUnary:
        add(OperatorCode::kUord, UnaryPool(*site.expr));
        break;
      case SiteKind::kStatement:
        StatementPools(site, add);
        break;
      case SiteKind::kParameter: {
        const std::vector<Parameter>& params = site.function->params;
        if (site.index + 1 < params.size() &&
            params[site.index].type == params[site.index + 1].type) {
          add(OperatorCode::kVdtscs, {[](Site& s) {
                std::swap(s.function->params[s.index],
                          s.function->params[s.index + 1]);
              }});
        }
        break;
      }
      case SiteKind::kModifierInvocation:
        add(OperatorCode::kMord, ModifierPool(site));
        break;
      case SiteKind::kVisibility: {
        std::vector<Edit> edits;
        for (Visibility v : {Visibility::kPublic, Visibility::kExternal,
                             Visibility::kInternal, Visibility::kPrivate}) {
          if (v == site.function->visibility) continue;
          edits.push_back([v](Site& s) { s.function->visibility = v; });
        }
        add(OperatorCode::kQrd, std::move(edits));
        break;
      }
      case SiteKind::kMutability: {
        std::vector<Edit> edits;
        for (Mutability m : {Mutability::kPure, Mutability::kView,
                             Mutability::kPayable, Mutability::kNonpayable}) {
          if (m == site.function->mutability) continue;
          edits.push_back([m](Site& s) { s.function->mutability = m; });
        }
        add(OperatorCode::kQrd, std::move(edits));
        break;
      }
    }
    return pools;
  }

 private:
  template <typename Add>
  void LiteralPools(const Site& site, Add& add) {
    const Expr& expr = *site.expr;
    switch (expr.kind) {
      case ExprKind::kIntLiteral: {
        uint64_t v = expr.int_value;
        std::vector<uint64_t> values = {0, 1};
        if (v > 0) values.push_back(v - 1);
        if (v < UINT64_MAX) values.push_back(v + 1);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        std::vector<Edit> edits;
        for (uint64_t value : values) {
          if (value == v) continue;
          edits.push_back([value](Site& s) { s.expr->int_value = value; });
        }
        add(OperatorCode::kLrI, std::move(edits));
        break;
      }
      case ExprKind::kBoolLiteral:
        add(OperatorCode::kLrB, {[](Site& s) {
              s.expr->int_value = s.expr->int_value == 0 ? 1 : 0;
            }});
        break;
      case ExprKind::kStringLiteral: {
        const std::string& text = expr.string_value;
        std::vector<std::string> values = {"", text.empty() ? "" : text.substr(1),
                                           std::string(text.rbegin(), text.rend())};
        std::vector<std::string> unique;
        for (const std::string& value : values) {
          if (value == text) continue;
          if (std::find(unique.begin(), unique.end(), value) != unique.end()) {
            continue;
          }
          unique.push_back(value);
        }
        std::vector<Edit> edits;
        for (const std::string& value : unique) {
          edits.push_back([value](Site& s) { s.expr->string_value = value; });
        }
        add(OperatorCode::kLrS, std::move(edits));
        break;
      }
      case ExprKind::kAddressLiteral: {
        std::vector<uint64_t> values = address_literals_;
        if (std::find(values.begin(), values.end(), kAttackerAddress) ==
            values.end()) {
          values.push_back(kAttackerAddress);
        }
        std::vector<Edit> edits;
        for (uint64_t value : values) {
          if (value == expr.int_value) continue;
          edits.push_back([value](Site& s) { s.expr->int_value = value; });
        }
        add(OperatorCode::kLrA, std::move(edits));
        add(OperatorCode::kRar, RarPool(expr));
        break;
      }
      default:
        break;
    }
  }

  std::vector<Edit> RarPool(const Expr& current) {
    std::vector<Edit> edits;
    for (const Expr& candidate : rar_templates_) {
      if (candidate.kind == current.kind &&
          ((candidate.kind == ExprKind::kBuiltin &&
            candidate.builtin == current.builtin) ||
           (candidate.kind == ExprKind::kIdentifier &&
            candidate.name == current.name) ||
           (candidate.kind == ExprKind::kAddressLiteral &&
            candidate.int_value == current.int_value))) {
        continue;
      }
      edits.push_back(ReplaceExpr(candidate));
    }
    return edits;
  }

  const std::vector<LocalInfo>* Frame(const Site& site) const {
    if (site.function_index >= 0) {
      return &symbols_.function_frames.at(site.function_index);
    }
    if (site.modifier_index >= 0) {
      return &symbols_.modifier_frames.at(site.modifier_index);
    }
    return nullptr;
  }

  std::vector<Edit> IdentifierPool(const Site& site, std::string* cls) {
    const Expr& expr = *site.expr;
    std::vector<std::string> names;
    switch (expr.binding.kind) {
      case BindingKind::kLocal: {
        *cls = TypeName(expr.type) + " local";
        const std::vector<LocalInfo>* frame = Frame(site);
        if (frame == nullptr) break;
        for (const std::string& name : expr.visible_locals) {
          if (name == expr.name) continue;
          bool same_type = std::any_of(
              frame->begin(), frame->end(), [&](const LocalInfo& local) {
                return local.name == name && local.type == expr.type;
              });
          if (same_type &&
              std::find(names.begin(), names.end(), name) == names.end()) {
            names.push_back(name);
          }
        }
        break;
      }
      case BindingKind::kStateVar:
      case BindingKind::kConstant: {
        bool constant = expr.binding.kind == BindingKind::kConstant;
        *cls = TypeName(expr.type) + (constant ? " constant" : " state");
        for (const StateVarInfo& var : symbols_.state_vars) {
          if (var.name == expr.name || var.is_constant != constant ||
              var.type != expr.type) {
            continue;
          }
          names.push_back(var.name);
        }
        break;
      }
      case BindingKind::kUnresolved:
        break;
    }
    std::vector<Edit> edits;
    for (const std::string& name : names) {
      edits.push_back([name](Site& s) { s.expr->name = name; });
    }
    return edits;
  }

  std::vector<Edit> MappingPool(const Site& site, std::string* cls) {
    const Expr& expr = *site.expr;
    auto it = symbols_.state_index.find(expr.name);
    if (it == symbols_.state_index.end()) return {};
    const Type& type = symbols_.state_vars[it->second].type;
    *cls = TypeName(type) + " state";
    std::vector<Edit> edits;
    for (const StateVarInfo& var : symbols_.state_vars) {
      if (var.name == expr.name || var.type != type) continue;
      std::string name = var.name;
      edits.push_back([name](Site& s) { s.expr->name = name; });
    }
    return edits;
  }

  std::vector<Edit> UnaryPool(const Expr& expr) {
    UnaryOp swap;
    switch (expr.unary_op) {
      case UnaryOp::kNeg: swap = UnaryOp::kNot; break;
      case UnaryOp::kNot: swap = UnaryOp::kNeg; break;
      case UnaryOp::kPostInc: swap = UnaryOp::kPostDec; break;
      case UnaryOp::kPostDec: swap = UnaryOp::kPostInc; break;
      default: return {};
    }
    return {
        [swap](Site& s) { s.expr->unary_op = swap; },
        [](Site& s) {
          SourceSpan span = s.expr->span;
          Expr operand = std::move(s.expr->operands[0]);
          *s.expr = std::move(operand);
          s.expr->span = span;
        },
    };
  }

  bool BodyIsVoid(const Site& site) const {
    return site.function == nullptr || !site.function->return_type;
  }

  template <typename Add>
  void StatementPools(const Site& site, Add& add) {
    const Stmt& stmt = (*site.block)[site.index];
    switch (stmt.kind) {
      case StmtKind::kVarDecl: {
        if (site.index + 1 >= site.block->size()) break;
        const Stmt& next = (*site.block)[site.index + 1];
        if (next.kind != StmtKind::kVarDecl || next.decl_type != stmt.decl_type ||
            stmt.exprs.empty() || next.exprs.empty() ||
            StructurallyEqual(stmt.exprs[0], next.exprs[0])) {
          break;
        }
        add(OperatorCode::kVdtscs, {[](Site& s) {
              std::swap((*s.block)[s.index].exprs[0],
                        (*s.block)[s.index + 1].exprs[0]);
            }});
        break;
      }
      case StmtKind::kAssign: {
        std::vector<Edit> edits;
        for (AssignOp op : {AssignOp::kAssign, AssignOp::kAddAssign,
                            AssignOp::kSubAssign, AssignOp::kMulAssign,
                            AssignOp::kDivAssign}) {
          if (op == stmt.assign_op) continue;
          edits.push_back([op](Site& s) { s.stmt().assign_op = op; });
        }
        add(OperatorCode::kAor, std::move(edits));
        add(OperatorCode::kEsd, {DeleteStmt()});
        break;
      }
      case StmtKind::kExpr:
      case StmtKind::kEmit:
      case StmtKind::kRequire:
      case StmtKind::kAssert:
      case StmtKind::kTransfer:
        add(OperatorCode::kEsd, {DeleteStmt()});
        break;
      case StmtKind::kReturn:
      case StmtKind::kBreak:
      case StmtKind::kContinue: {
        std::vector<Edit> edits = {DeleteStmt()};
        bool in_loop = site.loop_depth > 0;
        if (in_loop && stmt.kind != StmtKind::kBreak) {
          edits.push_back(SetStmt(StmtKind::kBreak));
        }
        if (in_loop && stmt.kind != StmtKind::kContinue) {
          edits.push_back(SetStmt(StmtKind::kContinue));
        }
        if (stmt.kind != StmtKind::kReturn && BodyIsVoid(site)) {
          edits.push_back(SetStmt(StmtKind::kReturn));
        }
        add(OperatorCode::kJsrd, std::move(edits));
        break;
      }
      default:
        break;
    }
  }

  std::vector<Edit> ModifierPool(const Site& site) {
    const ModifierInvocation& invocation = site.function->modifiers[site.index];
    std::vector<Edit> edits = {[](Site& s) {
      auto& modifiers = s.function->modifiers;
      modifiers.erase(modifiers.begin() + static_cast<std::ptrdiff_t>(s.index));
    }};
    for (const ModifierDecl& modifier : contract_.modifiers) {
      if (modifier.name == invocation.name ||
          modifier.params.size() != invocation.args.size()) {
        continue;
      }
      std::string name = modifier.name;
      edits.push_back(
          [name](Site& s) { s.function->modifiers[s.index].name = name; });
    }
    return edits;
  }

  const ContractDecl& contract_;
  const ContractSymbols& symbols_;
  std::vector<Site>& sites_;
  std::vector<Expr> rar_templates_;
  std::vector<uint64_t> address_literals_;
};

}  // namespace

MutationEngine::MutationEngine(CheckedUnit unit)
    : unit_(std::move(unit)), pools_(std::make_unique<Pools>()) {
  if (unit_.unit.contracts.empty()) {
    throw std::invalid_argument("unit has no contract to mutate");
  }
  original_bytecode_ = CompileShared(unit_);
  original_fingerprint_ = Fingerprint(*original_bytecode_);
  pools_->original_text = Print(unit_.unit);

  std::vector<Site> sites = internal::EnumerateSites(unit_.unit, 0);
  PoolBuilder builder(unit_, sites);
  for (size_t i = 0; i < sites.size(); ++i) {
    const Site& site = sites[i];
    std::string identifier_class;
    auto pools = builder.Build(site, &identifier_class);
    if (pools.empty()) continue;
    MutationCandidate candidate;
    candidate.index = candidates_.size();
    candidate.node = SiteKindName(site.kind);
    candidate.span = site.span;
    if (site.function != nullptr) {
      candidate.scope = site.function->name;
    } else if (site.modifier != nullptr) {
      candidate.scope = site.modifier->name;
    }
    for (OperatorCode op : kAllOperators) {
      if (pools.count(op) > 0) candidate.operators.push_back(op);
    }
    candidate.identifier_class = identifier_class;
    candidates_.push_back(std::move(candidate));
    pools_->site_of.push_back(i);
    pools_->edits.push_back(std::move(pools));
  }
}

MutationEngine::~MutationEngine() = default;

size_t MutationEngine::PoolSize(size_t candidate, OperatorCode op) const {
  const auto& pools = pools_->edits.at(candidate);
  auto it = pools.find(op);
  return it == pools.end() ? 0 : it->second.size();
}

MutationAttempt MutationEngine::Apply(size_t candidate, OperatorCode op,
                                      size_t replacement) const {
  const std::vector<Edit>& edits = pools_->edits.at(candidate).at(op);
  MutationAttempt attempt;
  attempt.candidate = candidate;
  attempt.op = op;
  attempt.replacement = replacement;
  attempt.span = candidates_[candidate].span;
  attempt.unit = unit_.unit;
  std::vector<Site> sites = internal::EnumerateSites(attempt.unit, 0);
  edits.at(replacement)(sites.at(pools_->site_of[candidate]));
  return attempt;
}

std::optional<MutationAttempt> MutationEngine::MutateOnce(Rng& rng) const {
  std::vector<size_t> remaining(candidates_.size());
  std::iota(remaining.begin(), remaining.end(), size_t{0});
  while (!remaining.empty()) {
    size_t pick = UniformIndex(rng, remaining.size());
    size_t candidate = remaining[pick];
    const std::vector<OperatorCode>& ops = candidates_[candidate].operators;
    if (ops.empty()) {
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
      continue;
    }
    OperatorCode op = ops[UniformIndex(rng, ops.size())];
    size_t replacement = UniformIndex(rng, PoolSize(candidate, op));
    return Apply(candidate, op, replacement);
  }
  return std::nullopt;
}

std::vector<MutationAttempt> MutationEngine::EnumerateAll() const {
  std::vector<MutationAttempt> attempts;
  for (size_t c = 0; c < candidates_.size(); ++c) {
    for (OperatorCode op : candidates_[c].operators) {
      for (size_t r = 0; r < PoolSize(c, op); ++r) {
        attempts.push_back(Apply(c, op, r));
      }
    }
  }
  return attempts;
}

GenerationResult MutationEngine::Generate(const GenerationConfig& config) const {
  if (config.target < 1 || config.cap < config.target) {
    throw std::invalid_argument("generation needs 1 <= target <= cap");
  }
  GenerationResult result;
  Rng rng(config.seed);
  std::set<Digest> seen;
  while (result.stats.viable < config.target &&
         result.stats.attempts < config.cap) {
    std::optional<MutationAttempt> attempt = MutateOnce(rng);
    if (!attempt) break;
    ++result.stats.attempts;
    Mutant mutant = ClassifyPrinted(
        *attempt, pools_->original_text, unit_.unit.file, original_fingerprint_,
        seen, static_cast<uint32_t>(result.stats.attempts));
    switch (mutant.classification) {
      case Classification::kStillborn:
        ++result.stats.stillborn;
        break;
      case Classification::kDuplicate:
        ++result.stats.duplicate;
        break;
      case Classification::kViable:
        ++result.stats.viable;
        break;
    }
    result.mutants.push_back(std::move(mutant));
  }
  result.stats.exhausted = result.stats.viable < config.target;
  return result;
}

}  // namespace mutforge
