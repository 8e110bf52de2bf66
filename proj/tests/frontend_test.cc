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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "moometrics/lexer.h"
#include "moometrics/lower.h"
#include "moometrics/syntax.h"
#include "test_support.h"

namespace moometrics {
namespace {

using ::moometrics::testing::F1Sources;
using ::moometrics::testing::LowerFiles;
using ::moometrics::testing::LowerSources;
using ::moometrics::testing::Slurp;

SourcePos At(int line, int column) { return SourcePos{"three.moo", line, column}; }

Stmt S(auto node) { return Stmt{std::move(node)}; }

constexpr std::string_view kThreeClasses =
    "package zoo;\n"
    "interface Feeds {\n"
    "  feed(food);\n"
    "}\n"
    "abstract class Animal implements Feeds {\n"
    "  field hunger;\n"
    "  feed(food) {\n"
    "    if (food) {\n"
    "      assign hunger;\n"
    "    } else {\n"
    "      return;\n"
    "    }\n"
    "  }\n"
    "}\n"
    "class Cat extends Animal {\n"
    "  purr() {\n"
    "    while (hunger) {\n"
    "      call Animal.feed(hunger);\n"
    "    }\n"
    "    access Animal.hunger;\n"
    "  }\n"
    "}\n";

TEST(ParseUnit, MinimalClass) {
  const ParseResult result = ParseUnit("package p; class A { }", "a.moo");
  ASSERT_TRUE(result.ok());
  EXPECT_TRUE(result.diagnostics.empty());
  EXPECT_EQ(result.unit->package_name, "p");
  ASSERT_EQ(result.unit->declarations.size(), 1u);
  EXPECT_EQ(result.unit->declarations[0].name, "A");
  EXPECT_EQ(result.unit->declarations[0].kind, DeclKind::kClass);
}

TEST(ParseUnit, MissingClassNameReportsTheBrace) {
  const ParseResult result = ParseUnit("package p; class { }", "a.moo");
  ASSERT_FALSE(result.ok());
  ASSERT_EQ(result.diagnostics.size(), 1u);
  const Diagnostic& d = result.diagnostics[0];
  EXPECT_EQ(d.line, 1);
  EXPECT_EQ(d.column, 18);
  EXPECT_EQ(d.severity, Severity::kError);
  EXPECT_EQ(FormatDiagnostic(d),
            "a.moo:1:18: error: expected class name, found '{'");
}

TEST(ParseUnit, ThreeClassesMatchHandBuiltTree) {
  const ParseResult result = ParseUnit(kThreeClasses, "three.moo");
  ASSERT_TRUE(result.ok());

  SourceUnit expected;
  expected.path = "three.moo";
  expected.package_name = "zoo";
  expected.package_pos = At(1, 1);

  TypeDecl feeds;
  feeds.kind = DeclKind::kInterface;
  feeds.name = "Feeds";
  feeds.pos = At(2, 1);
  feeds.members.push_back(
      Member{MethodDecl{"feed", {"food"}, std::nullopt, {}, At(3, 3)}});

  TypeDecl animal;
  animal.kind = DeclKind::kAbstractClass;
  animal.name = "Animal";
  animal.implements = {"Feeds"};
  animal.pos = At(5, 1);
  animal.members.push_back(Member{FieldDecl{"hunger", At(6, 9)}});
  IfStmt branch;
  branch.condition = "food";
  branch.pos = At(8, 5);
  branch.then_block = Block{{S(AssignStmt{"hunger", At(9, 7)})}, At(8, 15),
                            At(10, 5)};
  branch.else_block =
      Block{{S(ReturnStmt{At(11, 7)})}, At(10, 12), At(12, 5)};
  animal.members.push_back(Member{MethodDecl{
      "feed", {"food"}, Block{{S(branch)}, At(7, 14), At(13, 3)},
      LineCounts{7, 0, 0}, At(7, 3)}});

  TypeDecl cat;
  cat.kind = DeclKind::kClass;
  cat.name = "Cat";
  cat.extends = "Animal";
  cat.pos = At(15, 1);
  WhileStmt loop;
  loop.condition = "hunger";
  loop.pos = At(17, 5);
  loop.body = Block{{S(CallStmt{"Animal", "feed", {"hunger"}, At(18, 7)})},
                    At(17, 20), At(19, 5)};
  cat.members.push_back(Member{MethodDecl{
      "purr",
      {},
      Block{{S(loop), S(AccessStmt{"Animal", "hunger", At(20, 5)})},
            At(16, 10), At(21, 3)},
      LineCounts{6, 0, 0},
      At(16, 3)}});

  expected.declarations = {feeds, animal, cat};
  EXPECT_EQ(*result.unit, expected);
}

TEST(ParseUnit, TreeRoundTripsToTheSameTokens) {
  for (const auto& path : F1Sources()) {
    const std::string text = Slurp(path);
    const ParseResult result = ParseUnit(text, path);
    ASSERT_TRUE(result.ok()) << path;
    const std::vector<Token> lexed = Lex(text, path).tokens;
    ASSERT_EQ(lexed.back().kind, TokenKind::kEnd);
    const std::vector<Token> unparsed = UnparseTokens(*result.unit);
    ASSERT_EQ(unparsed.size(), lexed.size()) << path;
    for (std::size_t i = 0; i < lexed.size(); ++i) {
      EXPECT_TRUE(SameToken(unparsed[i], lexed[i]))
          << path << " token " << i << ": " << unparsed[i].text << " vs "
          << lexed[i].text;
    }
  }
}

TEST(ParseUnit, IllegalCharacterIsPositioned) {
  const ParseResult result =
      ParseUnit("package p;\nclass A {\n  m() { $ return; }\n}\n", "a.moo");
  ASSERT_FALSE(result.ok());
  ASSERT_EQ(result.diagnostics.size(), 1u);
  EXPECT_EQ(result.diagnostics[0].line, 3);
  EXPECT_EQ(result.diagnostics[0].column, 9);
}

TEST(ParseUnit, RecoversToReportSeveralErrors) {
  const ParseResult result = ParseUnit(
      "package p;\n"
      "class A {\n"
      "  m() { call ; return; }\n"
      "  n() { access A; }\n"
      "}\n"
      "class { }\n"
      "class B { }\n",
      "a.moo");
  ASSERT_FALSE(result.ok());
  ASSERT_EQ(result.diagnostics.size(), 3u);
  EXPECT_EQ(result.diagnostics[0].line, 3);
  EXPECT_EQ(result.diagnostics[1].line, 4);
  EXPECT_EQ(result.diagnostics[2].line, 6);
  EXPECT_TRUE(std::is_sorted(
      result.diagnostics.begin(), result.diagnostics.end(),
      [](const Diagnostic& a, const Diagnostic& b) {
        return std::pair(a.line, a.column) < std::pair(b.line, b.column);
      }));
}

TEST(ParseUnit, KeywordsAreReserved) {
  EXPECT_FALSE(ParseUnit("package p; class while { }", "a.moo").ok());
  EXPECT_FALSE(ParseUnit("package if; class A { }", "a.moo").ok());
}

TEST(ParseUnit, ColumnsCountCodePoints) {
  // "é" is two bytes but one column.
  const ParseResult result =
      ParseUnit("package p; // é\nclass A { m() { é } }", "a.moo");
  ASSERT_FALSE(result.ok());
  EXPECT_EQ(result.diagnostics[0].line, 2);
  EXPECT_EQ(result.diagnostics[0].column, 17);
}

TEST(CountLines, ClassifiesLines) {
  constexpr std::string_view text =
      "a\n"
      "  // note\n"
      "\n"
      "   \t\n"
      "  x; // trailing comment is code\n"
      "b\n";
  EXPECT_EQ(CountLines(text, 1, 6), (LineCounts{6, 2, 1}));
  EXPECT_EQ(CountLines(text, 2, 2), (LineCounts{1, 0, 1}));
}

const Method& OnlyMethod(const DesignModel& model) {
  return model.packages.at(0).classes.at(0).methods.at(0);
}

TEST(Lower, IfWithCallAndReturn) {
  const DesignModel model = LowerSources(
      {{"a.moo",
        "package p;\n"
        "class A { m(x) { if (x) { call B.n(); } return; } }\n"
        "class B { n() { } }\n"}});
  const MethodFacts& facts = OnlyMethod(model).body;
  EXPECT_EQ(facts.decision_points, 1);
  ASSERT_EQ(facts.branches.size(), 1u);
  EXPECT_EQ(facts.branches[0].id, "br1");
  EXPECT_EQ(facts.branches[0].arm_count, 2);
  ASSERT_EQ(facts.sequence_points.size(), 3u);
  // Pre-order: the if header, the call inside it, then the return.
  EXPECT_EQ(facts.sequence_points[0].pos.column, 18);
  EXPECT_EQ(facts.sequence_points[1].pos.column, 27);
  EXPECT_EQ(facts.sequence_points[2].pos.column, 41);
  EXPECT_EQ(facts.calls, (std::vector<MethodRef>{{"p.B", "n"}}));
}

TEST(Lower, EmptyBody) {
  const DesignModel model =
      LowerSources({{"a.moo", "package p;\nclass A {\n  m() {\n  }\n}\n"}});
  const MethodFacts& facts = OnlyMethod(model).body;
  EXPECT_EQ(facts.decision_points, 0);
  EXPECT_TRUE(facts.sequence_points.empty());
  EXPECT_TRUE(facts.branches.empty());
  EXPECT_EQ(facts.loc_total, 2);
  EXPECT_EQ(facts.loc_blank, 0);
  EXPECT_EQ(facts.loc_comment, 0);
}

TEST(Lower, CommentAndBlankLines) {
  const DesignModel model = LowerSources(
      {{"a.moo",
        "package p;\nclass A {\n  m() {\n    // note\n\n    return;\n  }\n}\n"}});
  const MethodFacts& facts = OnlyMethod(model).body;
  EXPECT_EQ(facts.loc_total, 5);
  EXPECT_EQ(facts.loc_comment, 1);
  EXPECT_EQ(facts.loc_blank, 1);
}

TEST(Lower, UnresolvedNamesArePositionedErrors) {
  const auto lower = [](std::string text) {
    ParseResult parsed = ParseUnit(text, "a.moo");
    EXPECT_TRUE(parsed.ok());
    std::vector<SourceUnit> units{*parsed.unit};
    return Lower(units);
  };
  LowerResult r = lower("package p;\nclass A extends Z { }\n");
  ASSERT_FALSE(r.ok());
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_EQ(r.errors[0].line, 2);
  EXPECT_NE(r.errors[0].message.find("Z"), std::string::npos);

  r = lower("package p;\nclass A { m() { call A.nope(); } }\n");
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.errors[0].message.find("A.nope"), std::string::npos);
  EXPECT_EQ(r.errors[0].column, 17);

  r = lower("package p;\nclass A { m() { call Q.m(); } }\n");
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.errors[0].message.find("Q"), std::string::npos);

  r = lower("package p;\nclass A implements A { }\n");
  ASSERT_FALSE(r.ok());
}

TEST(Lower, DuplicateClassAcrossUnits) {
  ParseResult a = ParseUnit("package p; class A { }", "a.moo");
  ParseResult b = ParseUnit("package p; class A { }", "b.moo");
  std::vector<SourceUnit> units{*a.unit, *b.unit};
  const LowerResult r = Lower(units);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.errors[0].message.find("p.A"), std::string::npos);
}

TEST(Lower, ImportsResolveAcrossPackages) {
  const DesignModel model = LowerSources({
      {"a.moo", "package a;\nimport b;\nclass A { m() { call B.n(); } }\n"},
      {"b.moo", "package b;\nimport c.C;\nclass B extends C { }\n"},
      {"c.moo", "package c;\nclass C { field f; n() { access C.f; } }\n"},
  });
  ASSERT_EQ(model.packages.size(), 3u);
  // B.n is inherited; the call is recorded against the declaring class.
  EXPECT_EQ(model.packages[0].classes[0].methods[0].body.calls,
            (std::vector<MethodRef>{{"c.C", "n"}}));
  EXPECT_EQ(model.packages[1].classes[0].extends, "c.C");
}

TEST(Lower, AssignToVisibleFieldIsAnAccess) {
  const DesignModel model = LowerSources(
      {{"a.moo",
        "package p;\nclass A { field f; }\n"
        "class B extends A { m() { assign f; assign local; } }\n"}});
  const Class& b = model.packages[0].classes[1];
  EXPECT_EQ(b.methods[0].body.attribute_accesses,
            (std::set<AttributeRef>{{"p.A", "f"}}));
  EXPECT_EQ(b.methods[0].body.sequence_points.size(), 2u);
}

TEST(Lower, LoweredModelsValidate) {
  EXPECT_TRUE(ValidateModel(LowerFiles(F1Sources())).empty());
}

// Every statement gets exactly one sequence point; every if/while exactly
// one two-armed branch.
int CountStatements(const Block& block, int* branches) {
  int count = 0;
  for (const auto& stmt : block.statements) {
    ++count;
    if (const auto* node = std::get_if<IfStmt>(&stmt.node)) {
      ++*branches;
      count += CountStatements(node->then_block, branches);
      if (node->else_block) count += CountStatements(*node->else_block, branches);
    } else if (const auto* loop = std::get_if<WhileStmt>(&stmt.node)) {
      ++*branches;
      count += CountStatements(loop->body, branches);
    }
  }
  return count;
}

TEST(Lower, StatementsEqualSequencePointsOnF1) {
  const DesignModel model = LowerFiles(F1Sources());
  std::map<std::string, std::pair<int, int>> from_tree;
  for (const auto& path : F1Sources()) {
    const ParseResult parsed = ParseUnit(Slurp(path), path);
    for (const auto& decl : parsed.unit->declarations) {
      for (const auto& member : decl.members) {
        const auto* method = std::get_if<MethodDecl>(&member.node);
        if (method == nullptr || !method->body) continue;
        int branches = 0;
        const int statements = CountStatements(*method->body, &branches);
        from_tree[parsed.unit->package_name + "." + decl.name + "." +
                  method->name] = {statements, branches};
      }
    }
  }
  std::set<std::string> branch_ids;
  std::size_t methods = 0;
  for (const auto& package : model.packages) {
    for (const auto& cls : package.classes) {
      for (const auto& method : cls.methods) {
        if (!method.has_body) continue;
        ++methods;
        const auto [statements, branches] =
            from_tree.at(cls.name + "." + method.name);
        EXPECT_EQ(static_cast<int>(method.body.sequence_points.size()),
                  statements);
        EXPECT_EQ(static_cast<int>(method.body.branches.size()), branches);
        EXPECT_EQ(method.body.decision_points, branches);
        for (const auto& branch : method.body.branches) {
          EXPECT_EQ(branch.arm_count, 2);
          EXPECT_TRUE(branch_ids.insert(branch.id).second);
        }
      }
    }
  }
  EXPECT_EQ(methods, from_tree.size());
}

TEST(Lower, NeverInventsClasses) {
  const DesignModel model = LowerFiles(F1Sources());
  std::size_t declared = 0;
  for (const auto& path : F1Sources()) {
    declared += ParseUnit(Slurp(path), path).unit->declarations.size();
  }
  std::size_t lowered = 0;
  for (const auto& package : model.packages) lowered += package.classes.size();
  EXPECT_EQ(lowered, declared);
}

TEST(Lower, InputOrderDoesNotMatter) {
  std::vector<std::string> paths = F1Sources();
  const DesignModel reference = LowerFiles(paths);
  const std::string listing = WriteSymbolListing(reference);
  std::mt19937 rng(7);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(paths.begin(), paths.end(), rng);
    const DesignModel shuffled = LowerFiles(paths);
    EXPECT_EQ(shuffled, reference);
    EXPECT_EQ(WriteSymbolListing(shuffled), listing);
  }
}

TEST(WriteSymbolListing, ListsMethodsPointsAndBranches) {
  const DesignModel model = LowerSources(
      {{"a.moo", "package p;\nclass A {\n  m(x) {\n    while (x) { return; }\n  }\n}\n"}});
  EXPECT_EQ(WriteSymbolListing(model),
            "method p.A.m a.moo:3:3\n"
            "point sp1 p.A.m a.moo:4:5\n"
            "point sp2 p.A.m a.moo:4:17\n"
            "branch br1 p.A.m a.moo:4:5\n");
}

}  // namespace
}  // namespace moometrics
