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

#ifndef MOOMETRICS_THRESHOLD_CONFIG_H_
#define MOOMETRICS_THRESHOLD_CONFIG_H_

#include <optional>
#include <string>
#include <string_view>

#include "moometrics/rational.h"

namespace moometrics {

// Quality gates. An absent bound is not checked.
struct ThresholdConfig {
  std::optional<Rational> min_qua;
  std::optional<Rational> min_qc;
  std::optional<Rational> min_completeness;
  std::optional<Rational> max_volatility_ratio;
  std::optional<Rational> max_wmc;
  std::optional<Rational> max_rfc;
  std::optional<Rational> max_dit;
  std::optional<Rational> max_cbo;
  std::optional<Rational> max_lcom;
  std::optional<Rational> max_instability;
  std::optional<Rational> min_abstractness;
  std::optional<Rational> min_dip;
  bool require_acyclic = false;
  std::optional<Rational> min_ep_percent;
  std::optional<Rational> min_symbol_coverage;
  std::optional<Rational> min_method_coverage;
  std::optional<Rational> min_branch_coverage;
  std::optional<Rational> min_checklist_score;
  // A not-applicable metric with a configured bound counts as a violation.
  bool fail_on_not_applicable = false;
};

// `key = value` lines; blank lines and `#` comments are skipped. Values are
// integers, decimals, or a/b for bounds and true/false for flags. Unknown
// or repeated keys, bad values, and out-of-range bounds throw ConfigError.
ThresholdConfig ParseThresholdConfig(std::string_view text,
                                     const std::string& path);
ThresholdConfig ReadThresholdConfig(const std::string& path);

// Range check for a config built in code; throws ConfigError (line 0).
void ValidateThresholdConfig(const ThresholdConfig& config,
                             const std::string& path = "<config>");

}  // namespace moometrics

#endif  // MOOMETRICS_THRESHOLD_CONFIG_H_
