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

#include "moometrics/threshold_config.h"

#include <array>
#include <set>

#include "moometrics/errors.h"
#include "moometrics/ingest.h"

namespace moometrics {
namespace {

struct BoundKey {
  std::string_view name;
  std::optional<Rational> ThresholdConfig::*field;
  Rational low;
  std::optional<Rational> high;  // absent: unbounded above
};

const std::array<BoundKey, 17>& BoundKeys() {
  static const std::array<BoundKey, 17> keys = {{
      {"min_qua", &ThresholdConfig::min_qua, 0, Rational(1)},
      {"min_qc", &ThresholdConfig::min_qc, 0, Rational(1)},
      {"min_completeness", &ThresholdConfig::min_completeness, 0, Rational(1)},
      // Several changes per requirement push the ratio past 1.
      {"max_volatility_ratio", &ThresholdConfig::max_volatility_ratio, 0,
       std::nullopt},
      {"max_wmc", &ThresholdConfig::max_wmc, 0, std::nullopt},
      {"max_rfc", &ThresholdConfig::max_rfc, 0, std::nullopt},
      {"max_dit", &ThresholdConfig::max_dit, 0, std::nullopt},
      {"max_cbo", &ThresholdConfig::max_cbo, 0, std::nullopt},
      {"max_lcom", &ThresholdConfig::max_lcom, 0, std::nullopt},
      {"max_instability", &ThresholdConfig::max_instability, 0, Rational(1)},
      {"min_abstractness", &ThresholdConfig::min_abstractness, 0, Rational(1)},
      {"min_dip", &ThresholdConfig::min_dip, 0, Rational(1)},
      {"min_ep_percent", &ThresholdConfig::min_ep_percent, 0, Rational(100)},
      {"min_symbol_coverage", &ThresholdConfig::min_symbol_coverage, 0,
       Rational(1)},
      {"min_method_coverage", &ThresholdConfig::min_method_coverage, 0,
       Rational(1)},
      {"min_branch_coverage", &ThresholdConfig::min_branch_coverage, 0,
       Rational(1)},
      {"min_checklist_score", &ThresholdConfig::min_checklist_score, 0,
       Rational(1)},
  }};
  return keys;
}

void CheckRange(const BoundKey& key, const Rational& value,
                const std::string& path, int line) {
  if (value < key.low || (key.high && value > *key.high)) {
    std::string range = "[" + FormatDecimal(key.low, 0) + ", " +
                        (key.high ? FormatDecimal(*key.high, 0) : "inf") + ")";
    if (key.high) range.back() = ']';
    throw ConfigError(path, line,
                      std::string(key.name) + " out of range " + range);
  }
}

std::string_view Trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

}  // namespace

ThresholdConfig ParseThresholdConfig(std::string_view text,
                                     const std::string& path) {
  ThresholdConfig config;
  std::set<std::string, std::less<>> seen;
  int line_number = 0;
  while (!text.empty()) {
    ++line_number;
    const auto newline = text.find('\n');
    std::string_view line = text.substr(0, newline);
    text = newline == std::string_view::npos ? std::string_view()
                                             : text.substr(newline + 1);
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;

    const auto equals = line.find('=');
    if (equals == std::string_view::npos) {
      throw ConfigError(path, line_number, "expected 'key = value'");
    }
    const std::string_view key = Trim(line.substr(0, equals));
    const std::string_view value = Trim(line.substr(equals + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError(path, line_number, "expected 'key = value'");
    }
    if (!seen.emplace(key).second) {
      throw ConfigError(path, line_number,
                        "duplicate key " + std::string(key));
    }

    if (key == "require_acyclic" || key == "fail_on_not_applicable") {
      if (value != "true" && value != "false") {
        throw ConfigError(path, line_number,
                          std::string(key) + " must be true or false");
      }
      (key == "require_acyclic" ? config.require_acyclic
                                : config.fail_on_not_applicable) =
          value == "true";
      continue;
    }

    const BoundKey* match = nullptr;
    for (const auto& candidate : BoundKeys()) {
      if (candidate.name == key) match = &candidate;
    }
    if (match == nullptr) {
      throw ConfigError(path, line_number, "unknown key " + std::string(key));
    }
    const std::optional<Rational> bound = ParseRational(value);
    if (!bound) {
      throw ConfigError(path, line_number,
                        "not a number: " + std::string(value));
    }
    CheckRange(*match, *bound, path, line_number);
    config.*(match->field) = *bound;
  }
  return config;
}

ThresholdConfig ReadThresholdConfig(const std::string& path) {
  return ParseThresholdConfig(ReadFile(path), path);
}

void ValidateThresholdConfig(const ThresholdConfig& config,
                             const std::string& path) {
  for (const auto& key : BoundKeys()) {
    if (const auto& bound = config.*(key.field)) {
      CheckRange(key, *bound, path, 0);
    }
  }
}

}  // namespace moometrics
