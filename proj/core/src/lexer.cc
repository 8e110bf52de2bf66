// Copyright 2026 The moometrics Authors.
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

#include "moometrics/lexer.h"

#include <array>

namespace moometrics {
namespace {

constexpr std::array<std::string_view, 15> kKeywords = {
    "package", "import", "interface", "abstract", "class",
    "extends", "implements", "field", "call", "access",
    "assign", "if", "else", "while", "return",
};

bool IsIdentStart(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool IsIdentChar(char c) { return IsIdentStart(c) || (c >= '0' && c <= '9'); }

// Number of bytes in the UTF-8 sequence starting with `lead`.
std::size_t Utf8Length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;
}

}  // namespace

std::string FormatDiagnostic(const Diagnostic& diagnostic) {
  return diagnostic.path + ":" + std::to_string(diagnostic.line) + ":" +
         std::to_string(diagnostic.column) + ": " +
         (diagnostic.severity == Severity::kError ? "error" : "warning") +
         ": " + diagnostic.message;
}

bool HasErrors(const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) {
    if (d.severity == Severity::kError) return true;
  }
  return false;
}

bool SameToken(const Token& a, const Token& b) {
  return a.kind == b.kind && a.text == b.text;
}

bool IsKeyword(std::string_view word) {
  for (auto keyword : kKeywords) {
    if (keyword == word) return true;
  }
  return false;
}

LexResult Lex(std::string_view text, const std::string& path) {
  LexResult result;
  std::size_t i = 0;
  int line = 1;
  int column = 1;

  auto push = [&](TokenKind kind, std::string token_text, int at_column) {
    result.tokens.push_back(Token{kind, std::move(token_text), line, at_column});
  };

  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
      ++column;
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (IsIdentStart(c)) {
      const std::size_t start = i;
      while (i < text.size() && IsIdentChar(text[i])) ++i;
      std::string word(text.substr(start, i - start));
      const int start_column = column;
      column += static_cast<int>(i - start);
      const TokenKind kind =
          IsKeyword(word) ? TokenKind::kKeyword : TokenKind::kIdentifier;
      push(kind, std::move(word), start_column);
      continue;
    }

    TokenKind kind;
    switch (c) {
      case '{':
        kind = TokenKind::kLeftBrace;
        break;
      case '}':
        kind = TokenKind::kRightBrace;
        break;
      case '(':
        kind = TokenKind::kLeftParen;
        break;
      case ')':
        kind = TokenKind::kRightParen;
        break;
      case ';':
        kind = TokenKind::kSemicolon;
        break;
      case ',':
        kind = TokenKind::kComma;
        break;
      case '.':
        kind = TokenKind::kDot;
        break;
      default: {
        std::size_t length = Utf8Length(static_cast<unsigned char>(c));
        if (i + length > text.size()) length = text.size() - i;
        result.diagnostics.push_back(
            Diagnostic{path, line, column,
                       "illegal character '" +
                           std::string(text.substr(i, length)) + "'",
                       Severity::kError});
        i += length;
        ++column;
        continue;
      }
    }
    push(kind, std::string(1, c), column);
    ++column;
    ++i;
  }
  result.tokens.push_back(Token{TokenKind::kEnd, "", line, column});
  return result;
}

}  // namespace moometrics
