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

#ifndef MOOMETRICS_COVERAGE_METRICS_H_
#define MOOMETRICS_COVERAGE_METRICS_H_

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "moometrics/model.h"
#include "moometrics/rational.h"

namespace moometrics {

enum class CoverageScope { kModel, kPackage, kClass, kMethod };

std::string_view ToString(CoverageScope scope);

struct CoverageDimension {
  std::int64_t executed = 0;
  std::int64_t total = 0;

  // executed / total; absent when the scope has nothing to execute.
  std::optional<Rational> Ratio() const;
  bool operator==(const CoverageDimension&) const = default;
};

struct CoverageResult {
  CoverageScope scope = CoverageScope::kModel;
  std::string scope_id;  // empty for the model scope
  CoverageDimension symbol;
  CoverageDimension method;
  CoverageDimension branch;  // distinct (branch, arm) pairs over 2 per branch
  std::vector<std::string> uncovered_points;  // in id order of the model
};

// Joins traces against a model's executable inventory (methods with bodies,
// their sequence points, and both arms of each branch). Traces are merged
// with set semantics, so order and duplicates are irrelevant. Construction
// throws TraceReferenceError for any event id not in the model.
class CoverageAnalysis {
 public:
  CoverageAnalysis(const DesignModel& model,
                   std::span<const CoverageTrace> traces);

  // `id` is "" (model), "p" (package: classes declared in exactly p),
  // "p.C" (class), or "p.C.m" (method). Throws LookupError for unknown ids.
  CoverageResult Result(CoverageScope scope, std::string_view id = "") const;

  // Methods whose points were hit although no entry event names them.
  std::vector<std::string> MethodsHitWithoutEntry() const;

 private:
  std::vector<const Method*> MethodsIn(CoverageScope scope, std::string_view id,
                                       std::vector<std::string>* ids) const;

  const DesignModel& model_;
  std::set<std::string> entered_methods_;
  std::set<std::string> executed_points_;
  std::set<std::pair<std::string, BranchArm>> executed_arms_;
};

CoverageResult Coverage(const DesignModel& model,
                        std::span<const CoverageTrace> traces,
                        CoverageScope scope, std::string_view id = "");

}  // namespace moometrics

#endif  // MOOMETRICS_COVERAGE_METRICS_H_
