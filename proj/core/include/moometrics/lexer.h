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

#ifndef MOOMETRICS_LEXER_H_
#define MOOMETRICS_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

#include "moometrics/diagnostic.h"

namespace moometrics {

enum class TokenKind {
  kIdentifier,
  kKeyword,
  kLeftBrace,
  kRightBrace,
  kLeftParen,
  kRightParen,
  kSemicolon,
  kComma,
  kDot,
  kEnd,
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  int line = 1;
  int column = 1;
};

// Kind and text only; positions are ignored.
bool SameToken(const Token& a, const Token& b);

bool IsKeyword(std::string_view word);

struct LexResult {
  // Always terminated by a kEnd token.
  std::vector<Token> tokens;
  std::vector<Diagnostic> diagnostics;
};

// Comments ("//" to end of line) and whitespace are dropped. Illegal
// characters produce a diagnostic and are skipped so lexing can continue.
LexResult Lex(std::string_view text, const std::string& path);

}  // namespace moometrics

#endif  // MOOMETRICS_LEXER_H_
