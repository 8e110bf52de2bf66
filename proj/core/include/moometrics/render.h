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

#ifndef MOOMETRICS_RENDER_H_
#define MOOMETRICS_RENDER_H_

#include <optional>
#include <string>
#include <string_view>

#include "moometrics/report.h"

namespace moometrics {

enum class ReportFormat { kJson, kCsv, kMarkdown };

std::optional<ReportFormat> ParseReportFormat(std::string_view name);

// Deterministic: the same report always yields the same bytes.
//   json      one document, keys sorted, rationals as 6-digit decimals
//   csv       header `metric,scope,value,status`, then one row per metric
//   markdown  a table per section, then the violations and the verdict
std::string Render(const MetricsReport& report, ReportFormat format);

}  // namespace moometrics

#endif  // MOOMETRICS_RENDER_H_
