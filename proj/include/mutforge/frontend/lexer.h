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

#ifndef MUTFORGE_FRONTEND_LEXER_H_
#define MUTFORGE_FRONTEND_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

#include "mutforge/frontend/diagnostic.h"

namespace mutforge {

enum class TokenKind {
  kEnd,
  kIdentifier,
  kKeyword,
  kInteger,
  kHexAddress,
  kString,
  kPunct,
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  // Keyword / punctuation spelling, identifier name, or raw literal text.
  std::string text;
  // Decoded contents of a string literal.
  std::string string_value;
  SourceSpan span;

  bool Is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
};

// Tokenizes MiniSol. Comments (// and /* */) are skipped. Lexical errors are
// appended to diagnostics and lexing stops at the offending byte.
std::vector<Token> Lex(std::string_view source, const std::string& file,
                       Diagnostics& diagnostics);

}  // namespace mutforge

#endif  // MUTFORGE_FRONTEND_LEXER_H_
