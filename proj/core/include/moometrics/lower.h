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

#ifndef MOOMETRICS_LOWER_H_
#define MOOMETRICS_LOWER_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moometrics/diagnostic.h"
#include "moometrics/model.h"
#include "moometrics/syntax.h"

namespace moometrics {

struct LowerResult {
  std::optional<DesignModel> model;  // set iff `errors` is empty
  std::vector<Diagnostic> errors;

  bool ok() const { return model.has_value(); }
};

// Joins parsed units into one closed DesignModel.
//
// Names in extends/implements/call/access resolve against the unit's own
// package first, then its imports (an import names either a package or a
// single qualified class). Member references walk the extends chain (and,
// for calls, implemented interfaces) and are recorded against the class
// that declares the member. `assign x` records an attribute access when x
// is a field visible in the enclosing class; otherwise it is a local.
//
// Point ids ("sp1", "sp2", ...) and branch ids ("br1", ...) are assigned in
// qualified-class-name order, then source order, pre-order within bodies,
// so the result does not depend on the order of `units`.
LowerResult Lower(std::span<const SourceUnit> units);

// One line per method, sequence point, and branch:
//   method <pkg.Class.method> <path>:<line>:<col>
//   point <id> <pkg.Class.method> <path>:<line>:<col>
//   branch <id> <pkg.Class.method> <path>:<line>:<col>
std::string WriteSymbolListing(const DesignModel& model);

}  // namespace moometrics

#endif  // MOOMETRICS_LOWER_H_
