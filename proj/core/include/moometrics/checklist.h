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

#ifndef MOOMETRICS_CHECKLIST_H_
#define MOOMETRICS_CHECKLIST_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "moometrics/model.h"
#include "moometrics/rational.h"

namespace moometrics {

enum class ChecklistCategory { kTestable, kSupportable, kMaintainable, kPortable };

std::string_view ToString(ChecklistCategory category);

enum class CheckSource { kDeclared, kDerived };

struct CheckDefinition {
  std::string_view id;
  ChecklistCategory category;
  CheckSource source;
  std::string_view description;
};

// The fixed registry, in category order.
std::span<const CheckDefinition> CheckRegistry();
const CheckDefinition* FindCheck(std::string_view id);

struct ChecklistOptions {
  // supportable.comment_density passes when comment lines / total lines
  // across all method bodies reaches this value.
  Rational min_comment_density{1, 10};
  // maintainable.modularity fails when any one package holds more than this
  // fraction of all classes.
  Rational max_package_fraction{1, 2};
};

struct CheckOutcome {
  std::string id;
  ChecklistCategory category;
  CheckSource source;
  bool passed = false;
  // For derived checks, the measured quantity (absent if undefined).
  std::optional<Rational> measured;
};

struct CategoryScore {
  ChecklistCategory category;
  int passed = 0;
  int total = 0;
  Rational score;
};

struct ChecklistResult {
  std::vector<CheckOutcome> checks;       // registry order
  std::vector<CategoryScore> categories;  // category order
};

// Declared checks read from `facts`; derived checks computed from `model`.
// Throws MissingFactsError listing every declared check absent from
// `facts`, and LookupError for a fact that is not a declared check.
ChecklistResult EvaluateChecklist(const DesignModel& model,
                                  const std::map<std::string, bool>& facts,
                                  const ChecklistOptions& options = {});

}  // namespace moometrics

#endif  // MOOMETRICS_CHECKLIST_H_
