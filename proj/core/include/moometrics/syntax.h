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

// Parse tree for MiniOO (.moo) source files.
//
//   unit   := "package" path ";" import* decl*
//   import := "import" path ";"
//   decl   := "interface" NAME "{" sig* "}"
//           | ["abstract"] "class" NAME ["extends" NAME]
//             ["implements" NAME ("," NAME)*] "{" member* "}"
//   sig    := NAME "(" params? ")" ";"
//   member := "field" NAME ";" | NAME "(" params? ")" block
//   block  := "{" stmt* "}"
//   stmt   := "call" NAME "." NAME "(" args? ")" ";"
//           | "access" NAME "." NAME ";"
//           | "assign" NAME ";"
//           | "if" "(" NAME ")" block ["else" block]
//           | "while" "(" NAME ")" block
//           | "return" ";"
//   path   := NAME ("." NAME)*
//   params := NAME ("," NAME)*
//   args   := NAME ("," NAME)*

#ifndef MOOMETRICS_SYNTAX_H_
#define MOOMETRICS_SYNTAX_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "moometrics/diagnostic.h"
#include "moometrics/lexer.h"
#include "moometrics/model.h"

namespace moometrics {

struct Stmt;

struct Block {
  std::vector<Stmt> statements;
  SourcePos open;
  SourcePos close;

  bool operator==(const Block&) const;
};

struct CallStmt {
  std::string target;
  std::string method;
  std::vector<std::string> args;
  SourcePos pos;
  bool operator==(const CallStmt&) const = default;
};

struct AccessStmt {
  std::string owner;
  std::string attribute;
  SourcePos pos;
  bool operator==(const AccessStmt&) const = default;
};

struct AssignStmt {
  std::string name;
  SourcePos pos;
  bool operator==(const AssignStmt&) const = default;
};

struct ReturnStmt {
  SourcePos pos;
  bool operator==(const ReturnStmt&) const = default;
};

struct IfStmt {
  std::string condition;
  Block then_block;
  std::optional<Block> else_block;
  SourcePos pos;
  bool operator==(const IfStmt&) const = default;
};

struct WhileStmt {
  std::string condition;
  Block body;
  SourcePos pos;
  bool operator==(const WhileStmt&) const = default;
};

struct Stmt {
  std::variant<CallStmt, AccessStmt, AssignStmt, IfStmt, WhileStmt,
               ReturnStmt>
      node;
  bool operator==(const Stmt&) const = default;
};

// Line classification over a method body's brace extent.
struct LineCounts {
  int total = 0;
  int blank = 0;
  int comment = 0;
  bool operator==(const LineCounts&) const = default;
};

struct FieldDecl {
  std::string name;
  SourcePos pos;
  bool operator==(const FieldDecl&) const = default;
};

// An interface signature (no body) or a class method (with body).
struct MethodDecl {
  std::string name;
  std::vector<std::string> params;
  std::optional<Block> body;
  LineCounts lines;
  SourcePos pos;
  bool operator==(const MethodDecl&) const = default;
};

struct Member {
  std::variant<FieldDecl, MethodDecl> node;
  bool operator==(const Member&) const = default;
};

enum class DeclKind { kInterface, kAbstractClass, kClass };

struct TypeDecl {
  DeclKind kind = DeclKind::kClass;
  std::string name;
  std::optional<std::string> extends;
  std::vector<std::string> implements;  // as written
  std::vector<Member> members;          // source order
  SourcePos pos;
  bool operator==(const TypeDecl&) const = default;
};

struct ImportDecl {
  std::string path;
  SourcePos pos;
  bool operator==(const ImportDecl&) const = default;
};

struct SourceUnit {
  std::string path;
  std::string package_name;
  SourcePos package_pos;
  std::vector<ImportDecl> imports;
  std::vector<TypeDecl> declarations;
  bool operator==(const SourceUnit&) const = default;
};

struct ParseResult {
  std::optional<SourceUnit> unit;  // set iff there are no errors
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return unit.has_value(); }
};

// Parses one MiniOO file. Syntax errors are recovered from at statement and
// declaration boundaries so several can be reported per file.
ParseResult ParseUnit(std::string_view text, const std::string& path);

// Regenerates the token sequence a parse tree was built from (comments and
// positions excluded). Used to check that parsing loses nothing.
std::vector<Token> UnparseTokens(const SourceUnit& unit);

// Classifies lines [first_line, last_line] of `text` (1-based, inclusive).
// A line is a comment if its first non-blank characters are "//", blank if
// it holds only whitespace, and code otherwise.
LineCounts CountLines(std::string_view text, int first_line, int last_line);

}  // namespace moometrics

#endif  // MOOMETRICS_SYNTAX_H_
