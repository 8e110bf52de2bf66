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

#include "moometrics/model.h"

#include <algorithm>
#include <unordered_map>

namespace moometrics {

std::string_view ToString(ChangeReason reason) {
  switch (reason) {
    case ChangeReason::kBusiness:
      return "business";
    case ChangeReason::kClarification:
      return "clarification";
    case ChangeReason::kError:
      return "error";
    case ChangeReason::kScope:
      return "scope";
    case ChangeReason::kOther:
      return "other";
  }
  return "other";
}

std::optional<ChangeReason> ParseChangeReason(std::string_view text) {
  if (text == "business") return ChangeReason::kBusiness;
  if (text == "clarification") return ChangeReason::kClarification;
  if (text == "error") return ChangeReason::kError;
  if (text == "scope") return ChangeReason::kScope;
  if (text == "other") return ChangeReason::kOther;
  return std::nullopt;
}

std::string_view ToString(ClassKind kind) {
  switch (kind) {
    case ClassKind::kConcrete:
      return "concrete";
    case ClassKind::kAbstract:
      return "abstract";
    case ClassKind::kInterface:
      return "interface";
  }
  return "concrete";
}

std::string_view ToString(BranchArm arm) {
  return arm == BranchArm::kTaken ? "taken" : "not_taken";
}

std::vector<std::string> ValidateRequirementSet(const RequirementSet& reqs) {
  std::vector<std::string> violations;
  std::set<std::string> seen;
  for (const auto& req : reqs.requirements) {
    if (req.id.empty()) {
      violations.push_back("requirement with empty id");
    } else if (!seen.insert(req.id).second) {
      violations.push_back("duplicate requirement id " + req.id);
    }
    for (const auto& [reviewer, label] : req.reviewer_verdicts) {
      if (!reqs.reviewers.contains(reviewer)) {
        violations.push_back("requirement " + req.id +
                             " has a verdict from undeclared reviewer " +
                             reviewer);
      }
    }
    for (std::size_t i = 1; i < req.changes.size(); ++i) {
      if (req.changes[i].sequence <= req.changes[i - 1].sequence) {
        violations.push_back("requirement " + req.id +
                             " has non-increasing change sequence numbers");
        break;
      }
    }
  }
  for (const auto& [entity, checklist] : reqs.entity_checklists) {
    if (checklist.required_services.empty()) {
      violations.push_back("entity " + entity + " has no required services");
    }
  }
  std::sort(violations.begin(), violations.end());
  return violations;
}

const UseCase* UseCaseModel::Find(std::string_view name) const {
  for (const auto& use_case : use_cases) {
    if (use_case.name == name) return &use_case;
  }
  return nullptr;
}

std::vector<std::string> ValidateUseCaseModel(const UseCaseModel& model) {
  std::vector<std::string> violations;
  std::set<std::string> seen;
  for (const auto& use_case : model.use_cases) {
    if (!seen.insert(use_case.name).second) {
      violations.push_back("duplicate use case " + use_case.name);
    }
    for (const auto& actor : use_case.associated_actors) {
      if (!model.actors.contains(actor)) {
        violations.push_back("use case " + use_case.name +
                             " references undeclared actor " + actor);
      }
    }
  }
  std::sort(violations.begin(), violations.end());
  return violations;
}

std::string_view Class::SimpleName() const {
  std::string_view view = name;
  auto dot = view.rfind('.');
  return dot == std::string_view::npos ? view : view.substr(dot + 1);
}

const Method* Class::FindMethod(std::string_view method_name) const {
  for (const auto& method : methods) {
    if (method.name == method_name) return &method;
  }
  return nullptr;
}

std::vector<std::string> ValidateModel(const DesignModel& model) {
  std::vector<std::string> violations;
  std::unordered_map<std::string, const Class*> classes;
  std::set<std::string> package_names;

  for (const auto& package : model.packages) {
    if (!package_names.insert(package.name).second) {
      violations.push_back("duplicate package " + package.name);
    }
    for (const auto& cls : package.classes) {
      if (!classes.emplace(cls.name, &cls).second) {
        violations.push_back("duplicate class name " + cls.name);
      }
      const std::string prefix = package.name + ".";
      if (!cls.name.starts_with(prefix) ||
          cls.name.find('.', prefix.size()) != std::string::npos ||
          cls.name.size() == prefix.size()) {
        violations.push_back("class " + cls.name +
                             " is not qualified by its package " +
                             package.name);
      }
    }
  }

  auto lookup = [&](const std::string& name) -> const Class* {
    auto it = classes.find(name);
    return it == classes.end() ? nullptr : it->second;
  };

  std::set<std::string> point_ids;
  std::set<std::string> branch_ids;
  std::set<std::set<std::string>> cycles;

  for (const auto& package : model.packages) {
    for (const auto& cls : package.classes) {
      if (cls.extends) {
        const Class* parent = lookup(*cls.extends);
        if (cls.kind == ClassKind::kInterface) {
          violations.push_back("interface " + cls.name +
                               " cannot extend " + *cls.extends);
        } else if (parent == nullptr) {
          violations.push_back("class " + cls.name +
                               " extends unknown class " + *cls.extends);
        } else if (parent->kind == ClassKind::kInterface) {
          violations.push_back("kind mismatch: class " + cls.name +
                               " extends interface " + *cls.extends);
        }
      }
      for (const auto& iface : cls.implements) {
        const Class* target = lookup(iface);
        if (target == nullptr) {
          violations.push_back("class " + cls.name +
                               " implements unknown interface " + iface);
        } else if (target->kind != ClassKind::kInterface) {
          violations.push_back("kind mismatch: class " + cls.name +
                               " implements " + iface +
                               " which is not an interface");
        }
      }

      // Walk the extends chain; revisiting a class means a cycle.
      std::vector<std::string> chain{cls.name};
      const Class* current = &cls;
      while (current->extends) {
        const std::string& next = *current->extends;
        auto hit = std::find(chain.begin(), chain.end(), next);
        if (hit != chain.end()) {
          cycles.insert(std::set<std::string>(hit, chain.end()));
          break;
        }
        current = lookup(next);
        if (current == nullptr) break;
        chain.push_back(next);
      }

      std::set<std::string> method_names;
      for (const auto& method : cls.methods) {
        const std::string method_id = cls.name + "." + method.name;
        if (!method_names.insert(method.name).second) {
          violations.push_back("duplicate method " + method_id);
        }
        if (cls.kind == ClassKind::kInterface && method.has_body) {
          violations.push_back("interface method " + method_id +
                               " has a body");
        }
        if (cls.kind != ClassKind::kInterface && !method.has_body) {
          violations.push_back("method " + method_id + " has no body");
        }
        const MethodFacts& facts = method.body;
        if (facts.loc_total < 0 || facts.loc_blank < 0 ||
            facts.loc_comment < 0 ||
            facts.loc_blank + facts.loc_comment > facts.loc_total) {
          violations.push_back("inconsistent line counts in " + method_id);
        }
        if (facts.decision_points < 0) {
          violations.push_back("negative decision points in " + method_id);
        }
        for (const auto& point : facts.sequence_points) {
          if (!point_ids.insert(point.id).second) {
            violations.push_back("duplicate sequence point id " + point.id);
          }
        }
        for (const auto& branch : facts.branches) {
          if (!branch_ids.insert(branch.id).second) {
            violations.push_back("duplicate branch id " + branch.id);
          }
          if (branch.arm_count != 2) {
            violations.push_back("branch " + branch.id + " in " + method_id +
                                 " does not have two arms");
          }
        }
        for (const auto& call : facts.calls) {
          const Class* target = lookup(call.class_name);
          if (target == nullptr || !target->FindMethod(call.method_name)) {
            violations.push_back("method " + method_id +
                                 " calls unknown method " + call.Qualified());
          }
        }
        for (const auto& access : facts.attribute_accesses) {
          const Class* target = lookup(access.class_name);
          if (target == nullptr ||
              !target->attributes.contains(access.attribute_name)) {
            violations.push_back("method " + method_id +
                                 " accesses unknown attribute " +
                                 access.class_name + "." +
                                 access.attribute_name);
          }
        }
      }
    }
  }

  for (const auto& cycle : cycles) {
    std::string members;
    for (const auto& name : cycle) {
      if (!members.empty()) members += ", ";
      members += name;
    }
    violations.push_back("inheritance cycle: " + members);
  }

  std::sort(violations.begin(), violations.end());
  violations.erase(std::unique(violations.begin(), violations.end()),
                   violations.end());
  return violations;
}

}  // namespace moometrics
