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

#include "moometrics/coverage_metrics.h"

#include <unordered_set>

#include "moometrics/errors.h"

namespace moometrics {

std::string_view ToString(CoverageScope scope) {
  switch (scope) {
    case CoverageScope::kModel:
      return "model";
    case CoverageScope::kPackage:
      return "package";
    case CoverageScope::kClass:
      return "class";
    case CoverageScope::kMethod:
      return "method";
  }
  return "model";
}

std::optional<Rational> CoverageDimension::Ratio() const {
  if (total == 0) return std::nullopt;
  return Rational(executed, total);
}

CoverageAnalysis::CoverageAnalysis(const DesignModel& model,
                                   std::span<const CoverageTrace> traces)
    : model_(model) {
  std::unordered_set<std::string> methods;
  std::unordered_set<std::string> points;
  std::unordered_set<std::string> branches;
  for (const auto& package : model_.packages) {
    for (const auto& cls : package.classes) {
      for (const auto& method : cls.methods) {
        methods.insert(cls.name + "." + method.name);
        for (const auto& point : method.body.sequence_points) {
          points.insert(point.id);
        }
        for (const auto& branch : method.body.branches) {
          branches.insert(branch.id);
        }
      }
    }
  }

  for (const auto& trace : traces) {
    for (const auto& event : trace.events) {
      if (const auto* entry = std::get_if<MethodEntryEvent>(&event.event)) {
        if (!methods.contains(entry->method_id)) {
          throw TraceReferenceError(trace.path, event.line, entry->method_id);
        }
        entered_methods_.insert(entry->method_id);
      } else if (const auto* point = std::get_if<PointEvent>(&event.event)) {
        if (!points.contains(point->point_id)) {
          throw TraceReferenceError(trace.path, event.line, point->point_id);
        }
        executed_points_.insert(point->point_id);
      } else {
        const auto& arm = std::get<BranchArmEvent>(event.event);
        if (!branches.contains(arm.branch_id)) {
          throw TraceReferenceError(trace.path, event.line, arm.branch_id);
        }
        executed_arms_.emplace(arm.branch_id, arm.arm);
      }
    }
  }
}

std::vector<const Method*> CoverageAnalysis::MethodsIn(
    CoverageScope scope, std::string_view id,
    std::vector<std::string>* ids) const {
  std::vector<const Method*> methods;
  bool scope_found = scope == CoverageScope::kModel;
  for (const auto& package : model_.packages) {
    if (scope == CoverageScope::kPackage) {
      if (package.name != id) continue;
      scope_found = true;
    }
    for (const auto& cls : package.classes) {
      if (scope == CoverageScope::kClass) {
        if (cls.name != id) continue;
        scope_found = true;
      }
      for (const auto& method : cls.methods) {
        std::string method_id = cls.name + "." + method.name;
        if (scope == CoverageScope::kMethod) {
          if (method_id != id) continue;
          scope_found = true;
        }
        if (!method.has_body) continue;
        methods.push_back(&method);
        ids->push_back(std::move(method_id));
      }
    }
  }
  if (!scope_found) {
    throw LookupError("unknown " + std::string(ToString(scope)) + " " +
                      std::string(id));
  }
  return methods;
}

CoverageResult CoverageAnalysis::Result(CoverageScope scope,
                                        std::string_view id) const {
  CoverageResult result;
  result.scope = scope;
  result.scope_id = std::string(id);
  std::vector<std::string> ids;
  const auto methods = MethodsIn(scope, id, &ids);
  for (std::size_t i = 0; i < methods.size(); ++i) {
    const MethodFacts& facts = methods[i]->body;
    ++result.method.total;
    if (entered_methods_.contains(ids[i])) ++result.method.executed;
    for (const auto& point : facts.sequence_points) {
      ++result.symbol.total;
      if (executed_points_.contains(point.id)) {
        ++result.symbol.executed;
      } else {
        result.uncovered_points.push_back(point.id);
      }
    }
    for (const auto& branch : facts.branches) {
      result.branch.total += 2;
      for (BranchArm arm : {BranchArm::kTaken, BranchArm::kNotTaken}) {
        if (executed_arms_.contains({branch.id, arm})) ++result.branch.executed;
      }
    }
  }
  return result;
}

std::vector<std::string> CoverageAnalysis::MethodsHitWithoutEntry() const {
  std::vector<std::string> flagged;
  for (const auto& package : model_.packages) {
    for (const auto& cls : package.classes) {
      for (const auto& method : cls.methods) {
        const std::string id = cls.name + "." + method.name;
        if (entered_methods_.contains(id)) continue;
        for (const auto& point : method.body.sequence_points) {
          if (executed_points_.contains(point.id)) {
            flagged.push_back(id);
            break;
          }
        }
      }
    }
  }
  return flagged;
}

CoverageResult Coverage(const DesignModel& model,
                        std::span<const CoverageTrace> traces,
                        CoverageScope scope, std::string_view id) {
  return CoverageAnalysis(model, traces).Result(scope, id);
}

}  // namespace moometrics
