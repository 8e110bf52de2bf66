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

#include "moometrics/syntax.h"

#include <algorithm>
#include <utility>

namespace moometrics {

bool Block::operator==(const Block& other) const {
  return statements == other.statements && open == other.open &&
         close == other.close;
}

LineCounts CountLines(std::string_view text, int first_line, int last_line) {
  LineCounts counts;
  int line = 1;
  std::size_t start = 0;
  while (start <= text.size() && line <= last_line) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    if (line >= first_line) {
      std::string_view content = text.substr(start, end - start);
      std::size_t first = content.find_first_not_of(" \t\r\f\v");
      ++counts.total;
      if (first == std::string_view::npos) {
        ++counts.blank;
      } else if (content.substr(first).starts_with("//")) {
        ++counts.comment;
      }
    }
    if (end == text.size()) break;
    start = end + 1;
    ++line;
  }
  return counts;
}

namespace {

// Thrown after a diagnostic has been recorded; caught at a recovery point.
struct SyntaxError {};

std::string Describe(const Token& token) {
  if (token.kind == TokenKind::kEnd) return "end of file";
  return "'" + token.text + "'";
}

class Parser {
 public:
  Parser(std::string_view text, std::string path, std::vector<Token> tokens)
      : text_(text), path_(std::move(path)), tokens_(std::move(tokens)) {}

  SourceUnit Run() {
    SourceUnit unit;
    unit.path = path_;
    try {
      unit.package_pos = Pos(Peek());
      ExpectKeyword("package");
      unit.package_name = ParsePath("package path");
      Expect(TokenKind::kSemicolon, "';'");
    } catch (const SyntaxError&) {
      SyncToDeclaration(/*allow_import=*/true);
    }

    while (AtKeyword("import")) {
      try {
        ImportDecl import;
        import.pos = Pos(Advance());
        import.path = ParsePath("import path");
        Expect(TokenKind::kSemicolon, "';'");
        unit.imports.push_back(std::move(import));
      } catch (const SyntaxError&) {
        SyncToDeclaration(/*allow_import=*/true);
      }
    }

    while (Peek().kind != TokenKind::kEnd) {
      try {
        unit.declarations.push_back(ParseDeclaration());
      } catch (const SyntaxError&) {
        SyncToDeclaration(/*allow_import=*/false);
      }
    }
    return unit;
  }

  std::vector<Diagnostic>& diagnostics() { return diagnostics_; }

 private:
  const Token& Peek(std::size_t ahead = 0) const {
    std::size_t index = position_ + ahead;
    if (index >= tokens_.size()) return tokens_.back();
    return tokens_[index];
  }

  const Token& Advance() {
    const Token& token = Peek();
    if (position_ < tokens_.size() - 1) ++position_;
    return token;
  }

  bool AtKeyword(std::string_view keyword) const {
    return Peek().kind == TokenKind::kKeyword && Peek().text == keyword;
  }

  SourcePos Pos(const Token& token) const {
    return SourcePos{path_, token.line, token.column};
  }

  [[noreturn]] void Fail(const Token& token, const std::string& message) {
    diagnostics_.push_back(Diagnostic{path_, token.line, token.column, message,
                                      Severity::kError});
    throw SyntaxError{};
  }

  const Token& Expect(TokenKind kind, std::string_view what) {
    if (Peek().kind != kind) {
      Fail(Peek(), "expected " + std::string(what) + ", found " +
                       Describe(Peek()));
    }
    return Advance();
  }

  void ExpectKeyword(std::string_view keyword) {
    if (!AtKeyword(keyword)) {
      Fail(Peek(), "expected '" + std::string(keyword) + "', found " +
                       Describe(Peek()));
    }
    Advance();
  }

  std::string ExpectName(std::string_view what) {
    return Expect(TokenKind::kIdentifier, what).text;
  }

  std::string ParsePath(std::string_view what) {
    std::string path = ExpectName(what);
    while (Peek().kind == TokenKind::kDot) {
      Advance();
      path += ".";
      path += ExpectName(what);
    }
    return path;
  }

  // NAME ("," NAME)* up to, not including, the closing parenthesis.
  std::vector<std::string> ParseNameList(std::string_view what) {
    std::vector<std::string> names;
    if (Peek().kind == TokenKind::kRightParen) return names;
    names.push_back(ExpectName(what));
    while (Peek().kind == TokenKind::kComma) {
      Advance();
      names.push_back(ExpectName(what));
    }
    return names;
  }

  bool AtDeclarationStart(bool allow_import) const {
    return AtKeyword("interface") || AtKeyword("abstract") ||
           AtKeyword("class") || (allow_import && AtKeyword("import"));
  }

  void SyncToDeclaration(bool allow_import) {
    // Always make progress past the offending token.
    if (Peek().kind != TokenKind::kEnd && !AtDeclarationStart(allow_import)) {
      Advance();
    }
    while (Peek().kind != TokenKind::kEnd && !AtDeclarationStart(allow_import)) {
      Advance();
    }
  }

  TypeDecl ParseDeclaration() {
    TypeDecl decl;
    decl.pos = Pos(Peek());
    if (AtKeyword("interface")) {
      Advance();
      decl.kind = DeclKind::kInterface;
      decl.name = ExpectName("interface name");
      Expect(TokenKind::kLeftBrace, "'{'");
      while (Peek().kind != TokenKind::kRightBrace) {
        if (Peek().kind == TokenKind::kEnd) Fail(Peek(), "expected '}'");
        MethodDecl sig;
        sig.pos = Pos(Peek());
        sig.name = ExpectName("method signature");
        Expect(TokenKind::kLeftParen, "'('");
        sig.params = ParseNameList("parameter name");
        Expect(TokenKind::kRightParen, "')'");
        Expect(TokenKind::kSemicolon, "';'");
        decl.members.push_back(Member{std::move(sig)});
      }
      Advance();
      return decl;
    }

    decl.kind = DeclKind::kClass;
    if (AtKeyword("abstract")) {
      Advance();
      decl.kind = DeclKind::kAbstractClass;
    }
    if (!AtKeyword("class")) {
      Fail(Peek(), decl.kind == DeclKind::kAbstractClass
                       ? "expected 'class', found " + Describe(Peek())
                       : "expected a declaration, found " + Describe(Peek()));
    }
    Advance();
    decl.name = ExpectName("class name");
    if (AtKeyword("extends")) {
      Advance();
      decl.extends = ExpectName("superclass name");
    }
    if (AtKeyword("implements")) {
      Advance();
      decl.implements.push_back(ExpectName("interface name"));
      while (Peek().kind == TokenKind::kComma) {
        Advance();
        decl.implements.push_back(ExpectName("interface name"));
      }
    }
    Expect(TokenKind::kLeftBrace, "'{'");
    while (Peek().kind != TokenKind::kRightBrace) {
      if (Peek().kind == TokenKind::kEnd) Fail(Peek(), "expected '}'");
      if (AtKeyword("field")) {
        Advance();
        FieldDecl field;
        field.pos = Pos(Peek());
        field.name = ExpectName("field name");
        Expect(TokenKind::kSemicolon, "';'");
        decl.members.push_back(Member{std::move(field)});
        continue;
      }
      MethodDecl method;
      method.pos = Pos(Peek());
      method.name = ExpectName("member");
      Expect(TokenKind::kLeftParen, "'('");
      method.params = ParseNameList("parameter name");
      Expect(TokenKind::kRightParen, "')'");
      method.body = ParseBlock();
      method.lines =
          CountLines(text_, method.body->open.line, method.body->close.line);
      decl.members.push_back(Member{std::move(method)});
    }
    Advance();
    return decl;
  }

  Block ParseBlock() {
    Block block;
    block.open = Pos(Expect(TokenKind::kLeftBrace, "'{'"));
    while (Peek().kind != TokenKind::kRightBrace) {
      if (Peek().kind == TokenKind::kEnd || AtDeclarationStart(false)) {
        Fail(Peek(), "expected '}', found " + Describe(Peek()));
      }
      try {
        block.statements.push_back(ParseStatement());
      } catch (const SyntaxError&) {
        SyncToStatementEnd();
      }
    }
    block.close = Pos(Advance());
    return block;
  }

  // Skips to just past the next ';' or to (not past) the next '}'. A
  // declaration keyword means the enclosing class is broken too.
  void SyncToStatementEnd() {
    while (true) {
      const Token& token = Peek();
      if (token.kind == TokenKind::kEnd || AtDeclarationStart(false)) {
        throw SyntaxError{};
      }
      if (token.kind == TokenKind::kRightBrace) return;
      Advance();
      if (token.kind == TokenKind::kSemicolon) return;
    }
  }

  std::string ParseCondition() {
    Expect(TokenKind::kLeftParen, "'('");
    std::string name = ExpectName("condition name");
    Expect(TokenKind::kRightParen, "')'");
    return name;
  }

  Stmt ParseStatement() {
    const Token& head = Peek();
    const SourcePos pos = Pos(head);
    if (head.kind != TokenKind::kKeyword) {
      Fail(head, "expected a statement, found " + Describe(head));
    }
    if (head.text == "call") {
      Advance();
      CallStmt call;
      call.pos = pos;
      call.target = ExpectName("call target class");
      Expect(TokenKind::kDot, "'.'");
      call.method = ExpectName("method name");
      Expect(TokenKind::kLeftParen, "'('");
      call.args = ParseNameList("argument name");
      Expect(TokenKind::kRightParen, "')'");
      Expect(TokenKind::kSemicolon, "';'");
      return Stmt{std::move(call)};
    }
    if (head.text == "access") {
      Advance();
      AccessStmt access;
      access.pos = pos;
      access.owner = ExpectName("attribute owner");
      Expect(TokenKind::kDot, "'.'");
      access.attribute = ExpectName("attribute name");
      Expect(TokenKind::kSemicolon, "';'");
      return Stmt{std::move(access)};
    }
    if (head.text == "assign") {
      Advance();
      AssignStmt assign;
      assign.pos = pos;
      assign.name = ExpectName("assignment target");
      Expect(TokenKind::kSemicolon, "';'");
      return Stmt{std::move(assign)};
    }
    if (head.text == "if") {
      Advance();
      IfStmt stmt;
      stmt.pos = pos;
      stmt.condition = ParseCondition();
      stmt.then_block = ParseBlock();
      if (AtKeyword("else")) {
        Advance();
        stmt.else_block = ParseBlock();
      }
      return Stmt{std::move(stmt)};
    }
    if (head.text == "while") {
      Advance();
      WhileStmt stmt;
      stmt.pos = pos;
      stmt.condition = ParseCondition();
      stmt.body = ParseBlock();
      return Stmt{std::move(stmt)};
    }
    if (head.text == "return") {
      Advance();
      Expect(TokenKind::kSemicolon, "';'");
      return Stmt{ReturnStmt{pos}};
    }
    Fail(head, "expected a statement, found " + Describe(head));
  }

  std::string_view text_;
  std::string path_;
  std::vector<Token> tokens_;
  std::size_t position_ = 0;
  std::vector<Diagnostic> diagnostics_;
};

class Unparser {
 public:
  std::vector<Token> Run(const SourceUnit& unit) {
    Keyword("package");
    Path(unit.package_name);
    Punct(TokenKind::kSemicolon, ";");
    for (const auto& import : unit.imports) {
      Keyword("import");
      Path(import.path);
      Punct(TokenKind::kSemicolon, ";");
    }
    for (const auto& decl : unit.declarations) Declaration(decl);
    tokens_.push_back(Token{TokenKind::kEnd, "", 0, 0});
    return std::move(tokens_);
  }

 private:
  void Keyword(std::string text) {
    tokens_.push_back(Token{TokenKind::kKeyword, std::move(text), 0, 0});
  }
  void Name(std::string text) {
    tokens_.push_back(Token{TokenKind::kIdentifier, std::move(text), 0, 0});
  }
  void Punct(TokenKind kind, std::string text) {
    tokens_.push_back(Token{kind, std::move(text), 0, 0});
  }

  void Path(const std::string& path) {
    std::size_t start = 0;
    while (true) {
      std::size_t dot = path.find('.', start);
      Name(path.substr(start, dot - start));
      if (dot == std::string::npos) break;
      Punct(TokenKind::kDot, ".");
      start = dot + 1;
    }
  }

  void NameList(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i > 0) Punct(TokenKind::kComma, ",");
      Name(names[i]);
    }
  }

  void Declaration(const TypeDecl& decl) {
    if (decl.kind == DeclKind::kInterface) {
      Keyword("interface");
    } else {
      if (decl.kind == DeclKind::kAbstractClass) Keyword("abstract");
      Keyword("class");
    }
    Name(decl.name);
    if (decl.extends) {
      Keyword("extends");
      Name(*decl.extends);
    }
    if (!decl.implements.empty()) {
      Keyword("implements");
      NameList(decl.implements);
    }
    Punct(TokenKind::kLeftBrace, "{");
    for (const auto& member : decl.members) {
      if (const auto* field = std::get_if<FieldDecl>(&member.node)) {
        Keyword("field");
        Name(field->name);
        Punct(TokenKind::kSemicolon, ";");
        continue;
      }
      const auto& method = std::get<MethodDecl>(member.node);
      Name(method.name);
      Punct(TokenKind::kLeftParen, "(");
      NameList(method.params);
      Punct(TokenKind::kRightParen, ")");
      if (method.body) {
        BlockTokens(*method.body);
      } else {
        Punct(TokenKind::kSemicolon, ";");
      }
    }
    Punct(TokenKind::kRightBrace, "}");
  }

  void BlockTokens(const Block& block) {
    Punct(TokenKind::kLeftBrace, "{");
    for (const auto& stmt : block.statements) Statement(stmt);
    Punct(TokenKind::kRightBrace, "}");
  }

  void Condition(const std::string& name) {
    Punct(TokenKind::kLeftParen, "(");
    Name(name);
    Punct(TokenKind::kRightParen, ")");
  }

  void Statement(const Stmt& stmt) {
    std::visit(
        [this](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, CallStmt>) {
            Keyword("call");
            Name(node.target);
            Punct(TokenKind::kDot, ".");
            Name(node.method);
            Punct(TokenKind::kLeftParen, "(");
            NameList(node.args);
            Punct(TokenKind::kRightParen, ")");
            Punct(TokenKind::kSemicolon, ";");
          } else if constexpr (std::is_same_v<T, AccessStmt>) {
            Keyword("access");
            Name(node.owner);
            Punct(TokenKind::kDot, ".");
            Name(node.attribute);
            Punct(TokenKind::kSemicolon, ";");
          } else if constexpr (std::is_same_v<T, AssignStmt>) {
            Keyword("assign");
            Name(node.name);
            Punct(TokenKind::kSemicolon, ";");
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            Keyword("if");
            Condition(node.condition);
            BlockTokens(node.then_block);
            if (node.else_block) {
              Keyword("else");
              BlockTokens(*node.else_block);
            }
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            Keyword("while");
            Condition(node.condition);
            BlockTokens(node.body);
          } else {
            Keyword("return");
            Punct(TokenKind::kSemicolon, ";");
          }
        },
        stmt.node);
  }

  std::vector<Token> tokens_;
};

}  // namespace

ParseResult ParseUnit(std::string_view text, const std::string& path) {
  LexResult lexed = Lex(text, path);
  Parser parser(text, path, std::move(lexed.tokens));
  SourceUnit unit = parser.Run();

  ParseResult result;
  result.diagnostics = std::move(lexed.diagnostics);
  for (auto& d : parser.diagnostics()) result.diagnostics.push_back(std::move(d));
  std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return std::pair(a.line, a.column) <
                            std::pair(b.line, b.column);
                   });
  if (!HasErrors(result.diagnostics)) result.unit = std::move(unit);
  return result;
}

std::vector<Token> UnparseTokens(const SourceUnit& unit) {
  return Unparser().Run(unit);
}

}  // namespace moometrics
