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

#include "moometrics/checklist.h"

#include <array>
#include <map>

#include "moometrics/errors.h"

namespace moometrics {
namespace {

constexpr std::array<CheckDefinition, 10> kRegistry = {{
    {"testable.logging", ChecklistCategory::kTestable, CheckSource::kDeclared,
     "the code base has a logging facility"},
    {"testable.scriptable_interface", ChecklistCategory::kTestable,
     CheckSource::kDeclared, "functionality is reachable via scripts"},
    {"testable.runtime_monitoring", ChecklistCategory::kTestable,
     CheckSource::kDeclared, "runtime state can be monitored"},
    {"supportable.error_messages", ChecklistCategory::kSupportable,
     CheckSource::kDeclared, "failures produce actionable messages"},
    {"supportable.comment_density", ChecklistCategory::kSupportable,
     CheckSource::kDerived, "comment lines / total lines meets the minimum"},
    {"maintainable.modularity", ChecklistCategory::kMaintainable,
     CheckSource::kDerived, "no package holds too large a share of classes"},
    {"maintainable.reviewability", ChecklistCategory::kMaintainable,
     CheckSource::kDeclared, "changes go through review"},
    {"maintainable.accessibility", ChecklistCategory::kMaintainable,
     CheckSource::kDeclared, "system information is accessible to maintainers"},
    {"portable.platform_independent", ChecklistCategory::kPortable,
     CheckSource::kDeclared, "no platform-specific dependencies"},
    {"portable.deploy_documented", ChecklistCategory::kPortable,
     CheckSource::kDeclared, "deployment to other platforms is documented"},
}};

}  // namespace

std::string_view ToString(ChecklistCategory category) {
  switch (category) {
    case ChecklistCategory::kTestable:
      return "testable";
    case ChecklistCategory::kSupportable:
      return "supportable";
    case ChecklistCategory::kMaintainable:
      return "maintainable";
    case ChecklistCategory::kPortable:
      return "portable";
  }
  return "testable";
}

std::span<const CheckDefinition> CheckRegistry() { return kRegistry; }

const CheckDefinition* FindCheck(std::string_view id) {
  for (const auto& check : kRegistry) {
    if (check.id == id) return &check;
  }
  return nullptr;
}

ChecklistResult EvaluateChecklist(const DesignModel& model,
                                  const std::map<std::string, bool>& facts,
                                  const ChecklistOptions& options) {
  for (const auto& [id, value] : facts) {
    const CheckDefinition* check = FindCheck(id);
    if (check == nullptr || check->source != CheckSource::kDeclared) {
      throw LookupError("not a declared check: " + id);
    }
  }
  std::vector<std::string> missing;
  for (const auto& check : kRegistry) {
    if (check.source == CheckSource::kDeclared &&
        !facts.contains(std::string(check.id))) {
      missing.emplace_back(check.id);
    }
  }
  if (!missing.empty()) throw MissingFactsError(std::move(missing));

  std::int64_t loc_total = 0;
  std::int64_t loc_comment = 0;
  std::int64_t classes = 0;
  std::int64_t largest_package = 0;
  for (const auto& package : model.packages) {
    classes += static_cast<std::int64_t>(package.classes.size());
    largest_package = std::max<std::int64_t>(
        largest_package, static_cast<std::int64_t>(package.classes.size()));
    for (const auto& cls : package.classes) {
      for (const auto& method : cls.methods) {
        loc_total += method.body.loc_total;
        loc_comment += method.body.loc_comment;
      }
    }
  }

  ChecklistResult result;
  std::map<ChecklistCategory, CategoryScore> scores;
  for (const auto& check : kRegistry) {
    CheckOutcome outcome{std::string(check.id), check.category, check.source,
                         false, std::nullopt};
    if (check.source == CheckSource::kDeclared) {
      outcome.passed = facts.at(outcome.id);
    } else if (check.id == "supportable.comment_density") {
      // No method lines at all means there is nothing commented.
      if (loc_total > 0) {
        outcome.measured = Rational(loc_comment, loc_total);
        outcome.passed = *outcome.measured >= options.min_comment_density;
      }
    } else {
      if (classes > 0) {
        outcome.measured = Rational(largest_package, classes);
        outcome.passed = *outcome.measured <= options.max_package_fraction;
      } else {
        outcome.passed = true;
      }
    }
    CategoryScore& score = scores[check.category];
    score.category = check.category;
    ++score.total;
    if (outcome.passed) ++score.passed;
    result.checks.push_back(std::move(outcome));
  }
  for (auto& [category, score] : scores) {
    score.score = Rational(score.passed, score.total);
    result.categories.push_back(score);
  }
  return result;
}

}  // namespace moometrics
