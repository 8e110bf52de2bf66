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

#include "moometrics/req_metrics.h"

#include <algorithm>

#include "moometrics/errors.h"

namespace moometrics {
namespace {

const UseCase& FindUseCase(const UseCaseModel& model,
                           std::string_view use_case) {
  const UseCase* found = model.Find(use_case);
  if (found == nullptr) {
    throw LookupError("unknown use case " + std::string(use_case));
  }
  return *found;
}

std::int64_t Size(const auto& container) {
  return static_cast<std::int64_t>(container.size());
}

}  // namespace

std::int64_t Nau(const UseCaseModel& model, std::string_view use_case) {
  return Size(FindUseCase(model, use_case).associated_actors);
}

std::int64_t Nmu(const UseCaseModel& model, std::string_view use_case) {
  return Size(FindUseCase(model, use_case).messages);
}

std::int64_t Nscu(const UseCaseModel& model, std::string_view use_case) {
  return Size(FindUseCase(model, use_case).system_classes);
}

std::int64_t IdenticallyReviewedCount(const RequirementSet& reqs) {
  std::int64_t count = 0;
  for (const auto& req : reqs.requirements) {
    bool complete = !reqs.reviewers.empty();
    for (const auto& reviewer : reqs.reviewers) {
      if (!req.reviewer_verdicts.contains(reviewer)) {
        complete = false;
        break;
      }
    }
    if (!complete) continue;
    const std::string& first = req.reviewer_verdicts.begin()->second;
    bool identical = std::all_of(
        req.reviewer_verdicts.begin(), req.reviewer_verdicts.end(),
        [&](const auto& verdict) { return verdict.second == first; });
    if (identical) ++count;
  }
  return count;
}

Rational Qua(const RequirementSet& reqs) {
  if (reqs.requirements.empty()) {
    throw UndefinedMetricError("qua is undefined for zero requirements");
  }
  if (reqs.reviewers.empty()) {
    throw UndefinedMetricError("qua is undefined without reviewers");
  }
  return Rational(IdenticallyReviewedCount(reqs), Size(reqs.requirements));
}

QcResult Qc(const RequirementSet& reqs) {
  if (reqs.requirements.empty()) {
    throw UndefinedMetricError("qc is undefined for zero requirements");
  }
  QcResult result;
  for (const auto& req : reqs.requirements) {
    if (req.validity == Validity::kValid) {
      ++result.valid;
    } else {
      ++result.not_valid;
    }
  }
  const std::int64_t n = Size(reqs.requirements);
  if (result.not_valid >= 1) {
    result.value = Rational(result.valid, result.not_valid * n);
  } else {
    result.fallback = Rational(result.valid, n);
  }
  return result;
}

Rational Completeness(const RequirementSet& reqs, std::string_view entity) {
  auto it = reqs.entity_checklists.find(std::string(entity));
  if (it == reqs.entity_checklists.end()) {
    throw LookupError("no service checklist for entity " +
                      std::string(entity));
  }
  const EntityChecklist& checklist = it->second;
  if (checklist.required_services.empty()) {
    throw UndefinedMetricError("entity " + std::string(entity) +
                               " has no required services");
  }
  std::int64_t covered = 0;
  for (const auto& service : checklist.required_services) {
    if (checklist.provided_services.contains(service)) ++covered;
  }
  return Rational(covered, Size(checklist.required_services));
}

VolatilityResult Volatility(const RequirementSet& reqs) {
  VolatilityResult result;
  for (const auto& req : reqs.requirements) {
    for (const auto& change : req.changes) {
      if (change.reason != ChangeReason::kBusiness) ++result.count;
    }
  }
  if (!reqs.requirements.empty()) {
    result.ratio = Rational(result.count, Size(reqs.requirements));
  }
  return result;
}

RequirementMetrics ComputeRequirementMetrics(const RequirementSet& reqs,
                                             const UseCaseModel* use_cases) {
  RequirementMetrics metrics;
  if (use_cases != nullptr) {
    for (const auto& use_case : use_cases->use_cases) {
      metrics.use_cases.push_back(UseCaseCounts{
          use_case.name, Size(use_case.associated_actors),
          Size(use_case.messages), Size(use_case.system_classes)});
    }
  }
  if (!reqs.requirements.empty() && !reqs.reviewers.empty()) {
    metrics.qua = Qua(reqs);
  }
  if (!reqs.requirements.empty()) {
    metrics.qc = Qc(reqs);
    metrics.qc_defined = true;
  }
  for (const auto& [entity, checklist] : reqs.entity_checklists) {
    metrics.completeness.emplace(entity, Completeness(reqs, entity));
  }
  metrics.volatility = Volatility(reqs);
  return metrics;
}

}  // namespace moometrics
