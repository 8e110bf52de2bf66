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

#ifndef MOOMETRICS_TOOLS_CLI_H_
#define MOOMETRICS_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace moometrics {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitInputError = 2;

// Runs one command line (without the program name). The report goes to
// `out` unless --out is given; diagnostics and warnings go to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace moometrics

#endif  // MOOMETRICS_TOOLS_CLI_H_
