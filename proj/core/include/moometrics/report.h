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

#ifndef MOOMETRICS_REPORT_H_
#define MOOMETRICS_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "moometrics/checklist.h"
#include "moometrics/coverage_metrics.h"
#include "moometrics/design_metrics.h"
#include "moometrics/rational.h"
#include "moometrics/req_metrics.h"
#include "moometrics/threshold_config.h"

namespace moometrics {

enum class ReportSection { kRequirements, kDesign, kCoverage, kChecklist };
enum class MetricStatus { kOk, kViolation, kNotApplicable };

std::string_view ToString(ReportSection section);
std::string_view ToString(MetricStatus status);

// monostate marks a not-applicable value.
using MetricData = std::variant<std::monostate, std::int64_t, Rational, bool,
                                std::vector<std::string>>;

// Plain text form: integers as-is, rationals with 6 digits, "true"/"false",
// lists joined by ' ', and "n/a" for monostate.
std::string FormatMetricData(const MetricData& data);

struct MetricValue {
  ReportSection section = ReportSection::kDesign;
  std::string name;
  std::string scope;  // "model", or a use case, entity, package, class, ...
  MetricData value;
  MetricStatus status = MetricStatus::kOk;
  std::optional<Rational> fallback;  // only for not-applicable values
};

struct Violation {
  std::string metric;
  std::string scope;
  MetricData observed;
  MetricData bound;
};

struct MetricsReport {
  std::vector<MetricValue> metrics;
  std::vector<Violation> violations;
  bool pass = true;
};

// Row builders. Each returns one MetricValue per (metric, scope), in a fixed
// order, with status ok or not_applicable.
std::vector<MetricValue> RequirementRows(const RequirementMetrics& metrics);
std::vector<MetricValue> DesignRows(const DesignAnalysis& analysis,
                                    bool cbo_include_fan_in);
// Model, every package, and every class.
std::vector<MetricValue> CoverageRows(const CoverageAnalysis& coverage,
                                      const DesignModel& model);
// One bool row per check, then a score per category and for all checks.
std::vector<MetricValue> ChecklistRows(const ChecklistResult& checklist);

struct EvaluateOptions {
  // Which WMC row max_wmc applies to.
  WmcWeighting wmc_weighting = WmcWeighting::kCyclomatic;
  // Ored with config.fail_on_not_applicable.
  bool strict = false;
};

// Checks every configured bound against every row it applies to and sets
// the verdict. Throws ConfigError if a bound is out of range.
MetricsReport Evaluate(std::vector<MetricValue> metrics,
                       const ThresholdConfig& config,
                       const EvaluateOptions& options = {});

}  // namespace moometrics

#endif  // MOOMETRICS_REPORT_H_
