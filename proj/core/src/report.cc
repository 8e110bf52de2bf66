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

#include <map>

namespace moometrics {
namespace {

MetricValue Row(ReportSection section, std::string name, std::string scope,
                MetricData value) {
  MetricValue row;
  row.section = section;
  row.name = std::move(name);
  row.scope = std::move(scope);
  row.value = std::move(value);
  if (std::holds_alternative<std::monostate>(row.value)) {
    row.status = MetricStatus::kNotApplicable;
  }
  return row;
}

MetricData FromOptional(const std::optional<Rational>& value) {
  if (value) return *value;
  return std::monostate{};
}

enum class Direction { kMin, kMax };

struct Gate {
  Direction direction;
  const std::optional<Rational>* bound;
};

std::optional<Rational> AsRational(const MetricData& data) {
  if (const auto* integer = std::get_if<std::int64_t>(&data)) {
    return Rational(*integer);
  }
  if (const auto* rational = std::get_if<Rational>(&data)) return *rational;
  return std::nullopt;
}

}  // namespace

std::string_view ToString(ReportSection section) {
  switch (section) {
    case ReportSection::kRequirements:
      return "requirements";
    case ReportSection::kDesign:
      return "design";
    case ReportSection::kCoverage:
      return "coverage";
    case ReportSection::kChecklist:
      return "checklist";
  }
  return "design";
}

std::string_view ToString(MetricStatus status) {
  switch (status) {
    case MetricStatus::kOk:
      return "ok";
    case MetricStatus::kViolation:
      return "violation";
    case MetricStatus::kNotApplicable:
      return "not_applicable";
  }
  return "ok";
}

std::string FormatMetricData(const MetricData& data) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "n/a"; }
    std::string operator()(std::int64_t value) const {
      return std::to_string(value);
    }
    std::string operator()(const Rational& value) const {
      return FormatDecimal(value);
    }
    std::string operator()(bool value) const {
      return value ? "true" : "false";
    }
    std::string operator()(const std::vector<std::string>& items) const {
      std::string joined;
      for (const auto& item : items) {
        if (!joined.empty()) joined += ' ';
        joined += item;
      }
      return joined;
    }
  };
  return std::visit(Visitor{}, data);
}

std::vector<MetricValue> RequirementRows(const RequirementMetrics& metrics) {
  constexpr auto kSection = ReportSection::kRequirements;
  std::vector<MetricValue> rows;
  for (const auto& counts : metrics.use_cases) {
    rows.push_back(Row(kSection, "nau", counts.use_case, counts.nau));
    rows.push_back(Row(kSection, "nmu", counts.use_case, counts.nmu));
    rows.push_back(Row(kSection, "nscu", counts.use_case, counts.nscu));
  }
  rows.push_back(Row(kSection, "qua", "model", FromOptional(metrics.qua)));
  MetricValue qc = Row(kSection, "qc", "model", FromOptional(metrics.qc.value));
  qc.fallback = metrics.qc.fallback;
  rows.push_back(std::move(qc));
  for (const auto& [entity, value] : metrics.completeness) {
    rows.push_back(Row(kSection, "completeness", entity, value));
  }
  rows.push_back(
      Row(kSection, "volatility_count", "model", metrics.volatility.count));
  rows.push_back(Row(kSection, "volatility_ratio", "model",
                     FromOptional(metrics.volatility.ratio)));
  return rows;
}

std::vector<MetricValue> DesignRows(const DesignAnalysis& analysis,
                                    bool cbo_include_fan_in) {
  constexpr auto kSection = ReportSection::kDesign;
  std::vector<MetricValue> rows;
  for (const auto& [key, value] : analysis.Counts().AsMap()) {
    rows.push_back(Row(kSection, "count." + key, "model", value));
  }

  const AdpResult adp = analysis.Adp();
  rows.push_back(Row(kSection, "adp.acyclic", "model", adp.acyclic));
  for (const auto& cycle : adp.cycles) {
    rows.push_back(Row(kSection, "adp.cycle", "model", cycle));
  }

  constexpr LocMode kLocModes[] = {LocMode::kTotal, LocMode::kNoBlank,
                                   LocMode::kNoBlankNoComment};
  for (const auto& package : analysis.AllPackageMetrics()) {
    const std::string& scope = package.name;
    rows.push_back(Row(kSection, "ce", scope, package.ce));
    rows.push_back(Row(kSection, "ca", scope, package.ca));
    MetricValue instability = Row(kSection, "instability", scope,
                                  FromOptional(package.instability.value));
    instability.fallback = package.instability.fallback;
    rows.push_back(std::move(instability));
    rows.push_back(Row(kSection, "abstractness", scope,
                       FromOptional(package.abstractness)));
    rows.push_back(Row(kSection, "dip", scope, FromOptional(package.dip)));
    rows.push_back(Row(kSection, "ep_percent", scope, package.ep_percent));
    for (LocMode mode : kLocModes) {
      rows.push_back(Row(kSection, "loc." + std::string(ToString(mode)), scope,
                         analysis.Loc(LocScope::kPackage, scope, mode)));
    }
  }

  for (const auto& cls : analysis.AllClassMetrics(cbo_include_fan_in)) {
    const std::string& scope = cls.name;
    rows.push_back(
        Row(kSection, "wmc.cyclomatic", scope, FromOptional(cls.wmc_cyclomatic)));
    rows.push_back(Row(kSection, "wmc.unit", scope, FromOptional(cls.wmc_unit)));
    rows.push_back(Row(kSection, "rfc", scope, cls.rfc));
    rows.push_back(Row(kSection, "noc", scope, cls.noc));
    rows.push_back(Row(kSection, "dit", scope, cls.dit));
    rows.push_back(Row(kSection, "cbo", scope, cls.cbo));
    rows.push_back(Row(kSection, "lcom", scope, cls.lcom));
    for (LocMode mode : kLocModes) {
      rows.push_back(Row(kSection, "loc." + std::string(ToString(mode)), scope,
                         analysis.Loc(LocScope::kClass, scope, mode)));
    }
  }
  return rows;
}

std::vector<MetricValue> CoverageRows(const CoverageAnalysis& coverage,
                                      const DesignModel& model) {
  constexpr auto kSection = ReportSection::kCoverage;
  std::vector<MetricValue> rows;
  auto add = [&](CoverageScope scope, const std::string& id) {
    const CoverageResult result = coverage.Result(scope, id);
    const std::string label = id.empty() ? "model" : id;
    rows.push_back(Row(kSection, "coverage.symbol", label,
                       FromOptional(result.symbol.Ratio())));
    rows.push_back(Row(kSection, "coverage.method", label,
                       FromOptional(result.method.Ratio())));
    rows.push_back(Row(kSection, "coverage.branch", label,
                       FromOptional(result.branch.Ratio())));
    rows.push_back(Row(kSection, "coverage.uncovered_points", label,
                       result.uncovered_points));
  };
  add(CoverageScope::kModel, "");
  for (const auto& package : model.packages) {
    add(CoverageScope::kPackage, package.name);
  }
  for (const auto& package : model.packages) {
    for (const auto& cls : package.classes) add(CoverageScope::kClass, cls.name);
  }
  return rows;
}

std::vector<MetricValue> ChecklistRows(const ChecklistResult& checklist) {
  constexpr auto kSection = ReportSection::kChecklist;
  std::vector<MetricValue> rows;
  int passed = 0;
  for (const auto& check : checklist.checks) {
    rows.push_back(Row(kSection, "check", check.id, check.passed));
    if (check.passed) ++passed;
  }
  for (const auto& category : checklist.categories) {
    rows.push_back(Row(kSection, "checklist_score",
                       std::string(ToString(category.category)),
                       category.score));
  }
  if (!checklist.checks.empty()) {
    rows.push_back(
        Row(kSection, "checklist_score", "model",
            Rational(passed, static_cast<std::int64_t>(checklist.checks.size()))));
  }
  return rows;
}

MetricsReport Evaluate(std::vector<MetricValue> metrics,
                       const ThresholdConfig& config,
                       const EvaluateOptions& options) {
  ValidateThresholdConfig(config);
  const bool strict = options.strict || config.fail_on_not_applicable;
  const std::string wmc_row =
      "wmc." + std::string(ToString(options.wmc_weighting));
  const std::map<std::string, Gate, std::less<>> gates = {
      {"qua", {Direction::kMin, &config.min_qua}},
      {"qc", {Direction::kMin, &config.min_qc}},
      {"completeness", {Direction::kMin, &config.min_completeness}},
      {"volatility_ratio", {Direction::kMax, &config.max_volatility_ratio}},
      {wmc_row, {Direction::kMax, &config.max_wmc}},
      {"rfc", {Direction::kMax, &config.max_rfc}},
      {"dit", {Direction::kMax, &config.max_dit}},
      {"cbo", {Direction::kMax, &config.max_cbo}},
      {"lcom", {Direction::kMax, &config.max_lcom}},
      {"instability", {Direction::kMax, &config.max_instability}},
      {"abstractness", {Direction::kMin, &config.min_abstractness}},
      {"dip", {Direction::kMin, &config.min_dip}},
      {"ep_percent", {Direction::kMin, &config.min_ep_percent}},
      {"coverage.symbol", {Direction::kMin, &config.min_symbol_coverage}},
      {"coverage.method", {Direction::kMin, &config.min_method_coverage}},
      {"coverage.branch", {Direction::kMin, &config.min_branch_coverage}},
      {"checklist_score", {Direction::kMin, &config.min_checklist_score}},
  };

  MetricsReport report;
  for (auto& row : metrics) {
    if (row.name == "adp.cycle" && config.require_acyclic) {
      row.status = MetricStatus::kViolation;
      report.violations.push_back({"adp.cycle", row.scope, row.value, true});
      continue;
    }
    const auto gate = gates.find(row.name);
    if (gate == gates.end() || !*gate->second.bound) continue;
    const Rational& bound = **gate->second.bound;
    const std::optional<Rational> observed = AsRational(row.value);
    bool violated = false;
    if (!observed) {
      violated = strict && row.status == MetricStatus::kNotApplicable;
    } else if (gate->second.direction == Direction::kMin) {
      violated = *observed < bound;
    } else {
      violated = *observed > bound;
    }
    if (violated) {
      row.status = MetricStatus::kViolation;
      report.violations.push_back({row.name, row.scope, row.value, bound});
    }
  }
  report.metrics = std::move(metrics);
  report.pass = report.violations.empty();
  return report;
}

}  // namespace moometrics
