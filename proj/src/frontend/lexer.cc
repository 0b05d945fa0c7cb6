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

#include "mutforge/frontend/lexer.h"

#include <array>
#include <cctype>
#include <string_view>

namespace mutforge {
namespace {

constexpr std::array<std::string_view, 35> kKeywords = {
    "contract", "function", "constructor", "modifier", "event",
    "returns",  "return",   "if",          "else",     "while",
    "break",    "continue", "emit",        "require",  "assert",
    "transfer", "public",   "external",    "internal", "private",
    "pure",     "view",     "payable",     "constant", "uint",
    "bool",     "address",  "string",      "mapping",  "true",
    "false",    "msg",      "tx",          "block",    "_"};

// Longest punctuators first so that maximal munch falls out of a linear scan.
constexpr std::array<std::string_view, 33> kPunctuators = {
    "=>", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=", "-=",
    "*=", "/=", "{",  "}",  "(",  ")",  "[",  "]",  ";",  ",",  ".",
    "=",  "<",  ">",  "+",  "-",  "*",  "/",  "%",  "!",  "?",  ":"};

bool IsKeyword(std::string_view word) {
  for (std::string_view k : kKeywords) {
    if (k == word) {
      return true;
    }
  }
  return false;
}

class Lexer {
 public:
  Lexer(std::string_view source, const std::string& file,
        Diagnostics& diagnostics)
      : source_(source), file_(file), diagnostics_(diagnostics) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    while (true) {
      if (!SkipTrivia()) {
        break;
      }
      if (pos_ >= source_.size()) {
        break;
      }
      Token token;
      if (!Next(token)) {
        break;
      }
      tokens.push_back(std::move(token));
    }
    Token end;
    end.kind = TokenKind::kEnd;
    end.span = SpanFrom(pos_, line_, column_);
    tokens.push_back(end);
    return tokens;
  }

 private:
  SourceSpan SpanFrom(size_t begin, uint32_t line, uint32_t column) const {
    return SourceSpan{line, column, static_cast<uint32_t>(begin),
                      static_cast<uint32_t>(pos_)};
  }

  void Error(const std::string& message, size_t begin, uint32_t line,
             uint32_t column) {
    diagnostics_.push_back({Severity::kError, DiagnosticCode::kSyntaxError,
                            message, file_, SpanFrom(begin, line, column)});
  }

  void Advance() {
    if (source_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  // Returns false on an unterminated block comment.
  bool SkipTrivia() {
    while (pos_ < source_.size()) {
      char c = source_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else if (source_.substr(pos_, 2) == "//") {
        while (pos_ < source_.size() && source_[pos_] != '\n') {
          Advance();
        }
      } else if (source_.substr(pos_, 2) == "/*") {
        size_t begin = pos_;
        uint32_t line = line_;
        uint32_t column = column_;
        Advance();
        Advance();
        while (pos_ < source_.size() && source_.substr(pos_, 2) != "*/") {
          Advance();
        }
        if (pos_ >= source_.size()) {
          Error("unterminated block comment", begin, line, column);
          return false;
        }
        Advance();
        Advance();
      } else {
        break;
      }
    }
    return true;
  }

  bool Next(Token& token) {
    size_t begin = pos_;
    uint32_t line = line_;
    uint32_t column = column_;
    char c = source_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < source_.size() &&
             (std::isalnum(static_cast<unsigned char>(source_[pos_])) ||
              source_[pos_] == '_')) {
        Advance();
      }
      token.text = std::string(source_.substr(begin, pos_ - begin));
      token.kind =
          IsKeyword(token.text) ? TokenKind::kKeyword : TokenKind::kIdentifier;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      bool hex = source_.substr(pos_, 2) == "0x" ||
                 source_.substr(pos_, 2) == "0X";
      if (hex) {
        Advance();
        Advance();
        while (pos_ < source_.size() &&
               std::isxdigit(static_cast<unsigned char>(source_[pos_]))) {
          Advance();
        }
      } else {
        while (pos_ < source_.size() &&
               std::isdigit(static_cast<unsigned char>(source_[pos_]))) {
          Advance();
        }
      }
      if (pos_ < source_.size() &&
          (std::isalnum(static_cast<unsigned char>(source_[pos_])) ||
           source_[pos_] == '_')) {
        Error("malformed number literal", begin, line, column);
        return false;
      }
      token.text = std::string(source_.substr(begin, pos_ - begin));
      token.kind = hex ? TokenKind::kHexAddress : TokenKind::kInteger;
      if (hex && token.text.size() == 2) {
        Error("hex literal without digits", begin, line, column);
        return false;
      }
    } else if (c == '"') {
      Advance();
      std::string value;
      while (true) {
        if (pos_ >= source_.size() || source_[pos_] == '\n') {
          Error("unterminated string literal", begin, line, column);
          return false;
        }
        char ch = source_[pos_];
        if (ch == '"') {
          Advance();
          break;
        }
        if (ch == '\\') {
          Advance();
          if (pos_ >= source_.size()) {
            Error("unterminated string literal", begin, line, column);
            return false;
          }
          char escaped = source_[pos_];
          switch (escaped) {
            case 'n':
              value.push_back('\n');
              break;
            case 't':
              value.push_back('\t');
              break;
            case '"':
            case '\\':
              value.push_back(escaped);
              break;
            default:
              Error("unknown escape sequence", begin, line, column);
              return false;
          }
          Advance();
          continue;
        }
        value.push_back(ch);
        Advance();
      }
      token.kind = TokenKind::kString;
      token.text = std::string(source_.substr(begin, pos_ - begin));
      token.string_value = std::move(value);
    } else {
      bool matched = false;
      for (std::string_view p : kPunctuators) {
        if (source_.substr(pos_, p.size()) == p) {
          for (size_t i = 0; i < p.size(); ++i) {
            Advance();
          }
          token.kind = TokenKind::kPunct;
          token.text = std::string(p);
          matched = true;
          break;
        }
      }
      if (!matched) {
        Advance();
        Error("unexpected character '" + std::string(1, c) + "'", begin, line,
              column);
        return false;
      }
    }
    token.span = SpanFrom(begin, line, column);
    return true;
  }

  std::string_view source_;
  const std::string& file_;
  Diagnostics& diagnostics_;
  size_t pos_ = 0;
  uint32_t line_ = 1;
  uint32_t column_ = 1;
};

}  // namespace

std::vector<Token> Lex(std::string_view source, const std::string& file,
                       Diagnostics& diagnostics) {
  return Lexer(source, file, diagnostics).Run();
}

}  // namespace mutforge
