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

#ifndef MOOMETRICS_DIAGNOSTIC_H_
#define MOOMETRICS_DIAGNOSTIC_H_

#include <string>
#include <vector>

namespace moometrics {

enum class Severity { kError, kWarning };

// A positioned frontend message. Line and column are 1-based.
struct Diagnostic {
  std::string path;
  int line = 1;
  int column = 1;
  std::string message;
  Severity severity = Severity::kError;

  bool operator==(const Diagnostic&) const = default;
};

// "path:line:col: error: message"
std::string FormatDiagnostic(const Diagnostic& diagnostic);

bool HasErrors(const std::vector<Diagnostic>& diagnostics);

}  // namespace moometrics

#endif  // MOOMETRICS_DIAGNOSTIC_H_
