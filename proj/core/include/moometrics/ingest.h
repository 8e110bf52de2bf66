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

#ifndef MOOMETRICS_INGEST_H_
#define MOOMETRICS_INGEST_H_

#include <map>
#include <string>
#include <string_view>

#include "moometrics/model.h"

namespace moometrics {

// Readers for the line-oriented input formats. Blank lines and lines whose
// first non-blank character is '#' are ignored in every format. Each reader
// throws IngestError (format, reference, or duplicate) positioned at the
// offending line, or FileError when the file cannot be read.
//
// Requirements (.req):
//   reviewer <id>
//   req <id> "<text>" <valid|notyetvalid>
//   verdict <req-id> <reviewer-id> "<label>"
//   change <req-id> <seq> <business|clarification|error|scope|other>
//   entity <name> requires <svc>[,<svc>...]
//   entity <name> provides <svc>[,<svc>...]
// Quoted strings accept the escapes \" \\ and \n.
RequirementSet ParseRequirements(std::string_view text,
                                 const std::string& path);
RequirementSet ReadRequirements(const std::string& path);
std::string WriteRequirements(const RequirementSet& reqs);

// Use cases (.ucm):
//   actor <name> | usecase <name> | uses <usecase> <actor>
//   message <usecase> <name> | class <usecase> <class-name>
UseCaseModel ParseUseCases(std::string_view text, const std::string& path);
UseCaseModel ReadUseCases(const std::string& path);
std::string WriteUseCases(const UseCaseModel& model);

// Coverage traces (.trc), one event per line:
//   M <pkg.Class.method> | S <point-id> | B <branch-id> <taken|not_taken>
// The run id is the file's stem.
CoverageTrace ParseTrace(std::string_view text, const std::string& path);
CoverageTrace ReadTrace(const std::string& path);

// Checklist facts (.chk): <check-id> = <true|false>. Ids must be declared
// (not derived) checks of the built-in registry.
std::map<std::string, bool> ParseChecklistFacts(std::string_view text,
                                                const std::string& path);
std::map<std::string, bool> ReadChecklistFacts(const std::string& path);

// Whole-file read; throws FileError.
std::string ReadFile(const std::string& path);

}  // namespace moometrics

#endif  // MOOMETRICS_INGEST_H_
