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

// Domain types shared by every analysis stage. All of them are plain values:
// built once by the frontend or the ingest readers and then only read.

#ifndef MOOMETRICS_MODEL_H_
#define MOOMETRICS_MODEL_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace moometrics {

struct SourcePos {
  std::string path;
  int line = 0;
  int column = 0;

  auto operator<=>(const SourcePos&) const = default;
};

// ---------------------------------------------------------------------------
// Requirements

enum class Validity { kValid, kNotYetValid };

enum class ChangeReason { kBusiness, kClarification, kError, kScope, kOther };

std::string_view ToString(ChangeReason reason);
std::optional<ChangeReason> ParseChangeReason(std::string_view text);

struct RequirementChange {
  std::int64_t sequence = 0;
  ChangeReason reason = ChangeReason::kOther;

  bool operator==(const RequirementChange&) const = default;
};

struct Requirement {
  std::string id;
  std::string text;
  Validity validity = Validity::kValid;
  // reviewer-id -> interpretation label. Labels are opaque and compared by
  // exact string equality.
  std::map<std::string, std::string> reviewer_verdicts;
  // Sequence numbers strictly increase.
  std::vector<RequirementChange> changes;

  bool operator==(const Requirement&) const = default;
};

struct EntityChecklist {
  std::set<std::string> required_services;
  std::set<std::string> provided_services;

  bool operator==(const EntityChecklist&) const = default;
};

struct RequirementSet {
  std::vector<Requirement> requirements;
  std::set<std::string> reviewers;
  std::map<std::string, EntityChecklist> entity_checklists;

  bool operator==(const RequirementSet&) const = default;
};

// Empty iff ids are unique and non-empty, verdicts name declared reviewers,
// change sequences increase, and every checklist has required services.
std::vector<std::string> ValidateRequirementSet(const RequirementSet& reqs);

// ---------------------------------------------------------------------------
// Use cases

struct UseCase {
  std::string name;
  std::set<std::string> associated_actors;
  std::vector<std::string> messages;
  std::set<std::string> system_classes;

  bool operator==(const UseCase&) const = default;
};

struct UseCaseModel {
  std::set<std::string> actors;
  std::vector<UseCase> use_cases;

  const UseCase* Find(std::string_view name) const;

  bool operator==(const UseCaseModel&) const = default;
};

std::vector<std::string> ValidateUseCaseModel(const UseCaseModel& model);

// ---------------------------------------------------------------------------
// Design model

enum class ClassKind { kConcrete, kAbstract, kInterface };

std::string_view ToString(ClassKind kind);

// A method named by its declaring class's qualified name.
struct MethodRef {
  std::string class_name;
  std::string method_name;

  std::string Qualified() const { return class_name + "." + method_name; }
  auto operator<=>(const MethodRef&) const = default;
};

struct AttributeRef {
  std::string class_name;
  std::string attribute_name;

  auto operator<=>(const AttributeRef&) const = default;
};

struct SequencePoint {
  std::string id;
  SourcePos pos;

  bool operator==(const SequencePoint&) const = default;
};

struct Branch {
  std::string id;
  int arm_count = 2;
  SourcePos pos;

  bool operator==(const Branch&) const = default;
};

struct MethodFacts {
  std::vector<MethodRef> calls;
  std::set<AttributeRef> attribute_accesses;
  int decision_points = 0;
  std::vector<SequencePoint> sequence_points;
  std::vector<Branch> branches;
  int loc_total = 0;
  int loc_blank = 0;
  int loc_comment = 0;

  bool operator==(const MethodFacts&) const = default;
};

struct Method {
  std::string name;
  std::vector<std::string> params;
  // Interface signatures have no body; their facts are all empty.
  bool has_body = true;
  MethodFacts body;
  SourcePos pos;

  bool operator==(const Method&) const = default;
};

struct Class {
  // Fully qualified: "<package>.<simple name>".
  std::string name;
  ClassKind kind = ClassKind::kConcrete;
  std::optional<std::string> extends;
  std::set<std::string> implements;
  std::set<std::string> attributes;
  std::vector<Method> methods;
  SourcePos pos;

  std::string_view SimpleName() const;
  const Method* FindMethod(std::string_view method_name) const;

  bool operator==(const Class&) const = default;
};

struct Package {
  // Dot-separated path; "a" is the parent of "a.b".
  std::string name;
  std::vector<Class> classes;

  bool operator==(const Package&) const = default;
};

struct DesignModel {
  std::vector<Package> packages;

  bool operator==(const DesignModel&) const = default;
};

// Empty iff every design-model invariant holds. Each entry names the
// offending element; the list is sorted.
std::vector<std::string> ValidateModel(const DesignModel& model);

// ---------------------------------------------------------------------------
// Coverage traces

enum class BranchArm { kTaken, kNotTaken };

std::string_view ToString(BranchArm arm);

struct MethodEntryEvent {
  std::string method_id;  // "<package>.<Class>.<method>"
  bool operator==(const MethodEntryEvent&) const = default;
};

struct PointEvent {
  std::string point_id;
  bool operator==(const PointEvent&) const = default;
};

struct BranchArmEvent {
  std::string branch_id;
  BranchArm arm = BranchArm::kTaken;
  bool operator==(const BranchArmEvent&) const = default;
};

struct TraceEvent {
  std::variant<MethodEntryEvent, PointEvent, BranchArmEvent> event;
  int line = 0;  // source line in the trace file, 0 if built in memory

  bool operator==(const TraceEvent&) const = default;
};

struct CoverageTrace {
  std::string run_id;
  std::string path;
  std::vector<TraceEvent> events;

  bool operator==(const CoverageTrace&) const = default;
};

}  // namespace moometrics

#endif  // MOOMETRICS_MODEL_H_
