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

#include "moometrics/report.h"

#include <random>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "moometrics/errors.h"
#include "moometrics/render.h"
#include "test_support.h"

namespace moometrics {
namespace {

using ::moometrics::testing::F1Sources;
using ::moometrics::testing::LowerFiles;
using ::moometrics::testing::LowerSources;

MetricValue Design(std::string name, std::string scope, MetricData value) {
  MetricValue row;
  row.section = ReportSection::kDesign;
  row.name = std::move(name);
  row.scope = std::move(scope);
  row.value = std::move(value);
  return row;
}

std::vector<MetricValue> F1Rows() {
  static const DesignModel model = LowerFiles(F1Sources());
  return DesignRows(DesignAnalysis(model), false);
}

TEST(Evaluate, LcomAboveBoundIsAViolation) {
  ThresholdConfig config;
  config.max_lcom = Rational(5);
  const MetricsReport report =
      Evaluate({Design("lcom", "p.C", std::int64_t{7}), Design("lcom", "p.D", std::int64_t{5})},
               config);
  EXPECT_FALSE(report.pass);
  ASSERT_EQ(report.violations.size(), 1u);
  const Violation& v = report.violations[0];
  EXPECT_EQ(v.metric, "lcom");
  EXPECT_EQ(v.scope, "p.C");
  EXPECT_EQ(v.observed, MetricData(std::int64_t{7}));
  EXPECT_EQ(v.bound, MetricData(Rational(5)));
  EXPECT_EQ(report.metrics[0].status, MetricStatus::kViolation);
  EXPECT_EQ(report.metrics[1].status, MetricStatus::kOk);
}

TEST(Evaluate, EmptyConfigPasses) {
  const MetricsReport report = Evaluate(F1Rows(), ThresholdConfig{});
  EXPECT_TRUE(report.pass);
  EXPECT_TRUE(report.violations.empty());
}

TEST(Evaluate, RequireAcyclicNamesCycleMembers) {
  const DesignModel model = LowerSources({
      {"1.moo", "package p1;\nimport p2;\nclass A { m() { call B.m(); } }\n"},
      {"2.moo", "package p2;\nimport p1;\nclass B { m() { call A.m(); } }\n"},
  });
  ThresholdConfig config;
  config.require_acyclic = true;
  const MetricsReport report = Evaluate(DesignRows(DesignAnalysis(model), false), config);
  EXPECT_FALSE(report.pass);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].observed,
            MetricData(std::vector<std::string>{"p1", "p2"}));
  EXPECT_TRUE(Evaluate(DesignRows(DesignAnalysis(model), false), ThresholdConfig{}).pass);
}

TEST(Evaluate, WmcGateFollowsSelectedWeighting) {
  ThresholdConfig config;
  config.max_wmc = Rational(3);
  const std::vector<MetricValue> rows = {Design("wmc.cyclomatic", "p.C", Rational(4)),
                                         Design("wmc.unit", "p.C", Rational(2))};
  EXPECT_FALSE(Evaluate(rows, config).pass);
  EXPECT_TRUE(Evaluate(rows, config, {WmcWeighting::kUnit, false}).pass);
}

TEST(Evaluate, NotApplicableViolatesOnlyWhenStrict) {
  MetricValue isolated = Design("instability", "p", std::monostate{});
  isolated.status = MetricStatus::kNotApplicable;
  isolated.fallback = Rational(0);
  ThresholdConfig config;
  config.max_instability = Rational(1, 2);
  EXPECT_TRUE(Evaluate({isolated}, config).pass);
  EXPECT_FALSE(Evaluate({isolated}, config, {WmcWeighting::kCyclomatic, true}).pass);
  config.fail_on_not_applicable = true;
  EXPECT_FALSE(Evaluate({isolated}, config).pass);
  // Without a bound there is nothing to violate.
  EXPECT_TRUE(Evaluate({isolated}, ThresholdConfig{}, {WmcWeighting::kCyclomatic, true}).pass);
}

TEST(Evaluate, InvalidConfigRejected) {
  ThresholdConfig config;
  config.min_qua = Rational(2);
  EXPECT_THROW(Evaluate({}, config), ConfigError);
}

TEST(Evaluate, TighteningBoundsNeverTurnsFailIntoPass) {
  std::mt19937 rng(21);
  const std::vector<MetricValue> rows = F1Rows();
  for (int trial = 0; trial < 200; ++trial) {
    ThresholdConfig loose;
    loose.max_rfc = Rational(static_cast<std::int64_t>(rng() % 8));
    loose.max_lcom = Rational(static_cast<std::int64_t>(rng() % 6));
    loose.min_abstractness = Rational(static_cast<std::int64_t>(rng() % 4), 4);
    ThresholdConfig tight = loose;
    tight.max_rfc = *loose.max_rfc - Rational(static_cast<std::int64_t>(rng() % 2));
    if (*tight.max_rfc < Rational(0)) tight.max_rfc = Rational(0);
    tight.min_abstractness = std::min(Rational(1), *loose.min_abstractness + Rational(1, 4));
    const MetricsReport a = Evaluate(rows, loose);
    const MetricsReport b = Evaluate(rows, tight);
    if (b.pass) EXPECT_TRUE(a.pass);
    EXPECT_LE(a.violations.size(), b.violations.size());
  }
}

TEST(Render, JsonRationalsUseSixDigits) {
  const MetricsReport report =
      Evaluate({Design("abstractness", "p", Rational(2, 3))}, ThresholdConfig{});
  const std::string json = Render(report, ReportFormat::kJson);
  EXPECT_NE(json.find("\"0.666667\""), std::string::npos);
  const nlohmann::json parsed = nlohmann::json::parse(json);
  EXPECT_EQ(parsed["design"][0]["value"], "0.666667");
  EXPECT_EQ(parsed["verdict"], "pass");
}

TEST(Render, CsvHasHeaderPlusOneLinePerMetric) {
  const MetricsReport report = Evaluate(
      {Design("rfc", "p.A", std::int64_t{3}), Design("dit", "p.A", std::int64_t{0}),
       Design("ce", "x,y", std::int64_t{1})},
      ThresholdConfig{});
  const std::string csv = Render(report, ReportFormat::kCsv);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "metric,scope,value,status");
  EXPECT_NE(csv.find("ce,\"x,y\",1,ok"), std::string::npos);
}

TEST(Render, MarkdownShape) {
  ThresholdConfig config;
  config.max_lcom = Rational(3);
  const std::string md = Render(Evaluate(F1Rows(), config), ReportFormat::kMarkdown);
  EXPECT_EQ(md.rfind("# Metrics report\n", 0), 0u);
  EXPECT_NE(md.find("## design"), std::string::npos);
  EXPECT_EQ(md.find("## coverage"), std::string::npos);
  EXPECT_NE(md.find("| lcom | shop.io.Printer | 4 | 3.000000 |"), std::string::npos);
  EXPECT_NE(md.find("verdict: fail\n"), std::string::npos);
}

TEST(Render, DeterministicAcrossRuns) {
  ThresholdConfig config;
  config.max_cbo = Rational(1);
  for (ReportFormat format : {ReportFormat::kJson, ReportFormat::kCsv, ReportFormat::kMarkdown}) {
    EXPECT_EQ(Render(Evaluate(F1Rows(), config), format),
              Render(Evaluate(F1Rows(), config), format));
  }
}

TEST(Render, EveryValueShapeRendersInEveryFormat) {
  MetricValue na = Design("dip", "p", std::monostate{});
  na.status = MetricStatus::kNotApplicable;
  na.fallback = Rational(0);
  const std::vector<MetricValue> rows = {
      na, Design("rfc", "p|q", std::int64_t{-1}), Design("abstractness", "p", Rational(1, 3)),
      Design("adp.acyclic", "model", true),
      Design("adp.cycle", "model", std::vector<std::string>{"a", "b\"c"})};
  ThresholdConfig config;
  config.require_acyclic = true;
  const MetricsReport report = Evaluate(rows, config);
  for (ReportFormat format : {ReportFormat::kJson, ReportFormat::kCsv, ReportFormat::kMarkdown}) {
    EXPECT_FALSE(Render(report, format).empty());
  }
  EXPECT_NO_THROW(nlohmann::json::parse(Render(report, ReportFormat::kJson)));
  EXPECT_NE(Render(report, ReportFormat::kMarkdown).find("p\\|q"), std::string::npos);
  EXPECT_NE(Render(report, ReportFormat::kMarkdown).find("n/a (fallback 0.000000)"), std::string::npos);
}

TEST(Render, ParseFormatNames) {
  EXPECT_EQ(ParseReportFormat("json"), ReportFormat::kJson);
  EXPECT_EQ(ParseReportFormat("markdown"), ReportFormat::kMarkdown);
  EXPECT_FALSE(ParseReportFormat("xml"));
}

TEST(Rows, ChecklistScoresIncludeOverall) {
  ChecklistResult checklist;
  checklist.checks = {{"a", ChecklistCategory::kTestable, CheckSource::kDeclared, true, {}},
                      {"b", ChecklistCategory::kTestable, CheckSource::kDeclared, false, {}}};
  checklist.categories = {{ChecklistCategory::kTestable, 1, 2, Rational(1, 2)}};
  const std::vector<MetricValue> rows = ChecklistRows(checklist);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[3].scope, "model");
  EXPECT_EQ(rows[3].value, MetricData(Rational(1, 2)));
}

}  // namespace
}  // namespace moometrics
