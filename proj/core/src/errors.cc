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

#include "moometrics/errors.h"

#include <utility>

namespace moometrics {
namespace {

std::string JoinIds(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

}  // namespace

IngestError::IngestError(std::string path, int line, IngestErrorKind kind,
                         const std::string& message)
    : std::runtime_error(path + ":" + std::to_string(line) + ": " + message),
      path_(std::move(path)),
      line_(line),
      kind_(kind),
      message_(message) {}

ConfigError::ConfigError(std::string path, int line, const std::string& message)
    : std::runtime_error(
          (path.empty() ? std::string("config")
                        : path + (line > 0 ? ":" + std::to_string(line) : "")) +
          ": " + message),
      path_(std::move(path)),
      line_(line) {}

TraceReferenceError::TraceReferenceError(std::string path, int line,
                                         std::string id)
    : std::runtime_error(path + ":" + std::to_string(line) +
                         ": unresolved trace id '" + id + "'"),
      path_(std::move(path)),
      line_(line),
      id_(std::move(id)) {}

MissingFactsError::MissingFactsError(std::vector<std::string> ids)
    : std::runtime_error("missing checklist facts: " + JoinIds(ids)),
      ids_(std::move(ids)) {}

}  // namespace moometrics
