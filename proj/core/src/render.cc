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

#include "moometrics/render.h"

#include <nlohmann/json.hpp>

namespace moometrics {
namespace {

constexpr ReportSection kSections[] = {
    ReportSection::kRequirements, ReportSection::kDesign,
    ReportSection::kCoverage, ReportSection::kChecklist};

nlohmann::json ToJson(const MetricData& data) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(std::int64_t value) const { return value; }
    nlohmann::json operator()(const Rational& value) const {
      return FormatDecimal(value);
    }
    nlohmann::json operator()(bool value) const { return value; }
    nlohmann::json operator()(const std::vector<std::string>& items) const {
      return items;
    }
  };
  return std::visit(Visitor{}, data);
}

std::string RenderJson(const MetricsReport& report) {
  // nlohmann::json objects are std::map backed, so keys come out sorted.
  nlohmann::json document = nlohmann::json::object();
  for (ReportSection section : kSections) {
    document[std::string(ToString(section))] = nlohmann::json::array();
  }
  for (const auto& metric : report.metrics) {
    nlohmann::json entry = {
        {"metric", metric.name},
        {"scope", metric.scope},
        {"status", std::string(ToString(metric.status))},
        {"value", ToJson(metric.value)},
    };
    if (metric.fallback) entry["fallback"] = FormatDecimal(*metric.fallback);
    document[std::string(ToString(metric.section))].push_back(std::move(entry));
  }
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& violation : report.violations) {
    violations.push_back({{"bound", ToJson(violation.bound)},
                          {"metric", violation.metric},
                          {"observed", ToJson(violation.observed)},
                          {"scope", violation.scope}});
  }
  document["violations"] = std::move(violations);
  document["verdict"] = report.pass ? "pass" : "fail";
  return document.dump(2) + "\n";
}

std::string CsvField(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string RenderCsv(const MetricsReport& report) {
  std::string out = "metric,scope,value,status\n";
  for (const auto& metric : report.metrics) {
    out += CsvField(metric.name) + "," + CsvField(metric.scope) + "," +
           CsvField(FormatMetricData(metric.value)) + "," +
           std::string(ToString(metric.status)) + "\n";
  }
  return out;
}

std::string MarkdownCell(const std::string& text) {
  std::string escaped;
  for (char c : text) {
    if (c == '|') escaped += '\\';
    escaped += c == '\n' ? ' ' : c;
  }
  return escaped;
}

std::string RenderMarkdown(const MetricsReport& report) {
  std::string out = "# Metrics report\n";
  for (ReportSection section : kSections) {
    std::string table;
    for (const auto& metric : report.metrics) {
      if (metric.section != section) continue;
      std::string value = FormatMetricData(metric.value);
      if (metric.fallback) {
        value += " (fallback " + FormatDecimal(*metric.fallback) + ")";
      }
      table += "| " + MarkdownCell(metric.name) + " | " +
               MarkdownCell(metric.scope) + " | " + MarkdownCell(value) +
               " | " + std::string(ToString(metric.status)) + " |\n";
    }
    if (table.empty()) continue;
    out += "\n## " + std::string(ToString(section)) + "\n\n";
    out += "| metric | scope | value | status |\n|---|---|---|---|\n";
    out += table;
  }
  out += "\n## violations\n\n";
  if (report.violations.empty()) {
    out += "none\n";
  } else {
    out += "| metric | scope | observed | bound |\n|---|---|---|---|\n";
    for (const auto& violation : report.violations) {
      out += "| " + MarkdownCell(violation.metric) + " | " +
             MarkdownCell(violation.scope) + " | " +
             MarkdownCell(FormatMetricData(violation.observed)) + " | " +
             MarkdownCell(FormatMetricData(violation.bound)) + " |\n";
    }
  }
  out += "\nverdict: " + std::string(report.pass ? "pass" : "fail") + "\n";
  return out;
}

}  // namespace

std::optional<ReportFormat> ParseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "markdown") return ReportFormat::kMarkdown;
  return std::nullopt;
}

std::string Render(const MetricsReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson:
      return RenderJson(report);
    case ReportFormat::kCsv:
      return RenderCsv(report);
    case ReportFormat::kMarkdown:
      return RenderMarkdown(report);
  }
  return RenderJson(report);
}

}  // namespace moometrics
