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

#include "moometrics/coverage_metrics.h"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "moometrics/errors.h"
#include "moometrics/ingest.h"
#include "test_support.h"

namespace moometrics {
namespace {

using ::moometrics::testing::F1Sources;
using ::moometrics::testing::FixturePath;
using ::moometrics::testing::LowerFiles;
using ::moometrics::testing::LowerSources;

constexpr char kSmall[] =
    "package p;\n"
    "class A {\n"
    "  field f;\n"
    "  m() { if (c) { assign f; } else { return; } call A.n(); }\n"
    "  n() { }\n"
    "}\n";

TraceEvent Enter(std::string id) { return {MethodEntryEvent{std::move(id)}, 0}; }
TraceEvent Point(std::string id) { return {PointEvent{std::move(id)}, 0}; }
TraceEvent Arm(std::string id, BranchArm arm) { return {BranchArmEvent{std::move(id), arm}, 0}; }

CoverageTrace MakeTrace(std::vector<TraceEvent> events) {
  return CoverageTrace{"t", "mem.trc", std::move(events)};
}

std::vector<CoverageTrace> F1Traces() {
  std::vector<CoverageTrace> traces;
  for (const char* name : {"checkout", "print", "status"}) {
    traces.push_back(ReadTrace(FixturePath(std::string("f1/traces/") + name + ".trc")));
  }
  return traces;
}

TEST(Coverage, SmallModelPointIds) {
  const DesignModel model = LowerSources({{"a.moo", kSmall}});
  const Method& m = model.packages[0].classes[0].methods[0];
  ASSERT_EQ(m.body.sequence_points.size(), 4u);
  EXPECT_EQ(m.body.sequence_points[0].id, "sp1");  // if
  EXPECT_EQ(m.body.sequence_points[3].id, "sp4");  // call
  ASSERT_EQ(m.body.branches.size(), 1u);
  EXPECT_EQ(m.body.branches[0].id, "br1");
}

TEST(Coverage, ThreeOfFourPoints) {
  const DesignModel model = LowerSources({{"a.moo", kSmall}});
  const std::vector<CoverageTrace> traces = {MakeTrace(
      {Enter("p.A.m"), Point("sp1"), Arm("br1", BranchArm::kTaken), Point("sp2"), Point("sp4")})};
  const CoverageResult result = Coverage(model, traces, CoverageScope::kModel);
  EXPECT_EQ(result.symbol, (CoverageDimension{3, 4}));
  EXPECT_EQ(*result.symbol.Ratio(), Rational(3, 4));
  EXPECT_EQ(result.method, (CoverageDimension{1, 2}));
  EXPECT_EQ(result.branch, (CoverageDimension{1, 2}));
  EXPECT_EQ(result.uncovered_points, std::vector<std::string>{"sp3"});
}

TEST(Coverage, BothArmsAcrossTraces) {
  const DesignModel model = LowerSources({{"a.moo", kSmall}});
  const std::vector<CoverageTrace> traces = {
      MakeTrace({Enter("p.A.m"), Arm("br1", BranchArm::kTaken)}),
      MakeTrace({Enter("p.A.m"), Arm("br1", BranchArm::kNotTaken)})};
  EXPECT_EQ(*Coverage(model, traces, CoverageScope::kModel).branch.Ratio(), Rational(1));
}

TEST(Coverage, FullTraceIsComplete) {
  const DesignModel model = LowerSources({{"a.moo", kSmall}});
  const std::vector<CoverageTrace> traces = {MakeTrace(
      {Enter("p.A.m"), Point("sp1"), Arm("br1", BranchArm::kTaken), Point("sp2"),
       Arm("br1", BranchArm::kNotTaken), Point("sp3"), Point("sp4"), Enter("p.A.n")})};
  for (auto [scope, id] : std::vector<std::pair<CoverageScope, std::string>>{
           {CoverageScope::kModel, ""}, {CoverageScope::kPackage, "p"},
           {CoverageScope::kClass, "p.A"}, {CoverageScope::kMethod, "p.A.m"}}) {
    const CoverageResult result = Coverage(model, traces, scope, id);
    EXPECT_EQ(*result.symbol.Ratio(), Rational(1)) << id;
    EXPECT_EQ(*result.method.Ratio(), Rational(1)) << id;
    EXPECT_EQ(*result.branch.Ratio(), Rational(1)) << id;
    EXPECT_TRUE(result.uncovered_points.empty());
  }
}

TEST(Coverage, EmptyScopesAreNotApplicable) {
  const DesignModel model = LowerSources({{"a.moo", kSmall}});
  const CoverageResult n = Coverage(model, {}, CoverageScope::kMethod, "p.A.n");
  EXPECT_EQ(n.symbol.total, 0);
  EXPECT_FALSE(n.symbol.Ratio());
  EXPECT_FALSE(n.branch.Ratio());
  EXPECT_EQ(*n.method.Ratio(), Rational(0));
}

TEST(Coverage, UnknownReferencesThrow) {
  const DesignModel model = LowerSources({{"a.moo", kSmall}});
  const std::vector<std::vector<TraceEvent>> bad = {
      {Point("sp99")}, {Enter("p.A.zz")}, {Arm("br7", BranchArm::kTaken)}};
  for (const auto& events : bad) {
    const std::vector<CoverageTrace> traces = {MakeTrace(events)};
    EXPECT_THROW(CoverageAnalysis(model, traces), TraceReferenceError);
  }
  const CoverageAnalysis analysis(model, {});
  EXPECT_THROW(analysis.Result(CoverageScope::kClass, "p.Q"), LookupError);
  EXPECT_THROW(analysis.Result(CoverageScope::kPackage, "q"), LookupError);
}

TEST(Coverage, TraceFileErrorCarriesLine) {
  const DesignModel model = LowerSources({{"a.moo", kSmall}});
  const std::vector<CoverageTrace> traces = {ParseTrace("M p.A.m\nS sp1\nS sp42\n", "x.trc")};
  try {
    CoverageAnalysis analysis(model, traces);
    FAIL();
  } catch (const TraceReferenceError& e) {
    EXPECT_EQ(e.path(), "x.trc");
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.id(), "sp42");
  }
}

TEST(Coverage, F1HandCounts) {
  const DesignModel model = LowerFiles(F1Sources());
  const std::vector<CoverageTrace> traces = F1Traces();
  const CoverageAnalysis analysis(model, traces);
  const CoverageResult all = analysis.Result(CoverageScope::kModel);
  EXPECT_EQ(all.symbol, (CoverageDimension{34, 39}));
  EXPECT_EQ(all.method, (CoverageDimension{10, 12}));
  EXPECT_EQ(all.branch, (CoverageDimension{7, 8}));
  EXPECT_EQ(all.uncovered_points,
            (std::vector<std::string>{"sp12", "sp25", "sp31", "sp32", "sp33"}));
  const CoverageResult cart = analysis.Result(CoverageScope::kClass, "shop.Cart");
  EXPECT_EQ(cart.symbol, (CoverageDimension{12, 13}));
  EXPECT_EQ(cart.method, (CoverageDimension{3, 3}));
  EXPECT_EQ(cart.branch, (CoverageDimension{3, 4}));
  const CoverageResult printer = analysis.Result(CoverageScope::kClass, "shop.io.Printer");
  EXPECT_EQ(printer.symbol, (CoverageDimension{10, 11}));
  EXPECT_EQ(printer.method, (CoverageDimension{3, 4}));
  EXPECT_EQ(*analysis.Result(CoverageScope::kClass, "shop.model.Book").symbol.Ratio(),
            Rational(1, 2));
  EXPECT_EQ(*analysis.Result(CoverageScope::kPackage, "shop.model").symbol.Ratio(),
            Rational(3, 4));
  // The interface signature is not part of the method inventory.
  EXPECT_EQ(analysis.Result(CoverageScope::kClass, "shop.model.Priced").method.total, 0);
  EXPECT_EQ(analysis.MethodsHitWithoutEntry(),
            std::vector<std::string>{"shop.io.Printer.reset"});
}

TEST(Coverage, ClassesAddUpToPackagesAndModel) {
  const DesignModel model = LowerFiles(F1Sources());
  const std::vector<CoverageTrace> traces = F1Traces();
  const CoverageAnalysis analysis(model, traces);
  CoverageDimension symbol, method, branch;
  for (const auto& package : model.packages) {
    CoverageDimension ps, pm, pb;
    for (const auto& cls : package.classes) {
      const CoverageResult r = analysis.Result(CoverageScope::kClass, cls.name);
      ps.executed += r.symbol.executed;
      ps.total += r.symbol.total;
      pm.executed += r.method.executed;
      pm.total += r.method.total;
      pb.executed += r.branch.executed;
      pb.total += r.branch.total;
    }
    const CoverageResult p = analysis.Result(CoverageScope::kPackage, package.name);
    EXPECT_EQ(p.symbol, ps);
    EXPECT_EQ(p.method, pm);
    EXPECT_EQ(p.branch, pb);
    symbol.executed += ps.executed;
    symbol.total += ps.total;
    method.executed += pm.executed;
    method.total += pm.total;
    branch.executed += pb.executed;
    branch.total += pb.total;
  }
  const CoverageResult all = analysis.Result(CoverageScope::kModel);
  EXPECT_EQ(all.symbol, symbol);
  EXPECT_EQ(all.method, method);
  EXPECT_EQ(all.branch, branch);
}

TEST(Coverage, OrderAndDuplicationDoNotMatter) {
  const DesignModel model = LowerFiles(F1Sources());
  std::vector<CoverageTrace> traces = F1Traces();
  const CoverageResult base = Coverage(model, traces, CoverageScope::kModel);
  std::mt19937 rng(5);
  for (int round = 0; round < 10; ++round) {
    std::vector<CoverageTrace> shuffled = traces;
    shuffled.push_back(traces[rng() % traces.size()]);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& trace : shuffled) std::shuffle(trace.events.begin(), trace.events.end(), rng);
    const CoverageResult again = Coverage(model, shuffled, CoverageScope::kModel);
    EXPECT_EQ(again.symbol, base.symbol);
    EXPECT_EQ(again.method, base.method);
    EXPECT_EQ(again.branch, base.branch);
    EXPECT_EQ(again.uncovered_points, base.uncovered_points);
  }
}

TEST(Coverage, AddingTracesNeverLowersCoverage) {
  const DesignModel model = LowerFiles(F1Sources());
  std::vector<TraceEvent> pool;
  for (const auto& trace : F1Traces()) {
    pool.insert(pool.end(), trace.events.begin(), trace.events.end());
  }
  std::mt19937 rng(9);
  std::vector<CoverageTrace> traces;
  CoverageResult previous = Coverage(model, traces, CoverageScope::kModel);
  for (int i = 0; i < 30; ++i) {
    std::vector<TraceEvent> events;
    for (int k = 0; k < 4; ++k) events.push_back(pool[rng() % pool.size()]);
    traces.push_back(MakeTrace(events));
    const CoverageResult next = Coverage(model, traces, CoverageScope::kModel);
    EXPECT_GE(next.symbol.executed, previous.symbol.executed);
    EXPECT_GE(next.method.executed, previous.method.executed);
    EXPECT_GE(next.branch.executed, previous.branch.executed);
    previous = next;
  }
}

}  // namespace
}  // namespace moometrics
