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

#ifndef MOOMETRICS_REQ_METRICS_H_
#define MOOMETRICS_REQ_METRICS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moometrics/model.h"
#include "moometrics/rational.h"

namespace moometrics {

// Per-use-case counts. Each throws LookupError for an unknown use case.
std::int64_t Nau(const UseCaseModel& model, std::string_view use_case);
// Counts every `message` entry, including repeated names.
std::int64_t Nmu(const UseCaseModel& model, std::string_view use_case);
std::int64_t Nscu(const UseCaseModel& model, std::string_view use_case);

// Requirements on which every declared reviewer gave a verdict and all the
// verdict labels are identical.
std::int64_t IdenticallyReviewedCount(const RequirementSet& reqs);

// Unambiguity: identically-reviewed requirements / N.
// Throws UndefinedMetricError when N == 0 or no reviewers are declared.
Rational Qua(const RequirementSet& reqs);

struct QcResult {
  // Nv / (Nnv * N); absent when Nnv == 0.
  std::optional<Rational> value;
  // Nv / N, recorded only when `value` is absent.
  std::optional<Rational> fallback;
  std::int64_t valid = 0;      // Nv
  std::int64_t not_valid = 0;  // Nnv
};

// Correctness. Throws UndefinedMetricError when N == 0.
QcResult Qc(const RequirementSet& reqs);

// |provided ∩ required| / |required|. Throws LookupError when the entity has
// no checklist.
Rational Completeness(const RequirementSet& reqs, std::string_view entity);

struct VolatilityResult {
  std::int64_t count = 0;         // changes whose reason is not business
  std::optional<Rational> ratio;  // count / N; absent when N == 0
};

VolatilityResult Volatility(const RequirementSet& reqs);

struct UseCaseCounts {
  std::string use_case;
  std::int64_t nau = 0;
  std::int64_t nmu = 0;
  std::int64_t nscu = 0;
};

// Everything above in one pass; undefined set-level ratios are left empty.
struct RequirementMetrics {
  std::vector<UseCaseCounts> use_cases;  // file order
  std::optional<Rational> qua;
  QcResult qc;
  bool qc_defined = false;  // false when N == 0
  std::map<std::string, Rational> completeness;
  VolatilityResult volatility;
};

RequirementMetrics ComputeRequirementMetrics(const RequirementSet& reqs,
                                             const UseCaseModel* use_cases);

}  // namespace moometrics

#endif  // MOOMETRICS_REQ_METRICS_H_
