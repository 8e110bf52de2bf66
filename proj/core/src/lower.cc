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

#include "moometrics/lower.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace moometrics {
namespace {

std::string Qualify(const std::string& package, const std::string& name) {
  return package + "." + name;
}

std::string FormatPos(const SourcePos& pos) {
  return pos.path + ":" + std::to_string(pos.line) + ":" +
         std::to_string(pos.column);
}

struct DeclEntry {
  const SourceUnit* unit = nullptr;
  const TypeDecl* decl = nullptr;
};

class Lowering {
 public:
  explicit Lowering(std::span<const SourceUnit> units) {
    for (const auto& unit : units) units_.push_back(&unit);
    std::sort(units_.begin(), units_.end(),
              [](const SourceUnit* a, const SourceUnit* b) {
                return std::tie(a->package_name, a->path) <
                       std::tie(b->package_name, b->path);
              });
  }

  LowerResult Run() {
    CollectDeclarations();
    ResolveImports();
    BuildClassShells();
    CheckInheritanceCycles();
    LowerBodies();

    LowerResult result;
    std::sort(errors_.begin(), errors_.end(),
              [](const Diagnostic& a, const Diagnostic& b) {
                return std::tie(a.path, a.line, a.column, a.message) <
                       std::tie(b.path, b.line, b.column, b.message);
              });
    result.errors = std::move(errors_);
    if (!result.errors.empty()) return result;

    DesignModel model;
    for (const auto& package : packages_) {
      Package out{package, {}};
      for (auto& [name, cls] : classes_) {
        if (package_of_.at(name) == package) out.classes.push_back(cls);
      }
      model.packages.push_back(std::move(out));
    }
    result.model = std::move(model);
    return result;
  }

 private:
  void Error(const SourcePos& pos, std::string message) {
    errors_.push_back(
        Diagnostic{pos.path, pos.line, pos.column, std::move(message),
                   Severity::kError});
  }

  void CollectDeclarations() {
    for (const SourceUnit* unit : units_) {
      packages_.insert(unit->package_name);
      for (const auto& decl : unit->declarations) {
        const std::string name = Qualify(unit->package_name, decl.name);
        auto [it, inserted] = decls_.emplace(name, DeclEntry{unit, &decl});
        if (!inserted) {
          Error(decl.pos, "duplicate class name " + name +
                              " (first declared at " +
                              FormatPos(it->second.decl->pos) + ")");
          continue;
        }
        package_of_[name] = unit->package_name;
      }
    }
  }

  void ResolveImports() {
    for (const SourceUnit* unit : units_) {
      auto& visible = imported_[unit];
      for (const auto& import : unit->imports) {
        if (decls_.contains(import.path)) {
          visible.insert(import.path);
        } else if (packages_.contains(import.path)) {
          for (const auto& [name, package] : package_of_) {
            if (package == import.path) visible.insert(name);
          }
        } else {
          Error(import.pos, "unresolved import '" + import.path + "'");
        }
      }
    }
  }

  // Resolves a simple class name as seen from `unit`.
  std::optional<std::string> ResolveClass(const SourceUnit& unit,
                                          const std::string& name,
                                          const SourcePos& pos,
                                          std::string_view what) {
    const std::string local = Qualify(unit.package_name, name);
    if (decls_.contains(local)) return local;
    std::vector<std::string> candidates;
    for (const auto& fq : imported_[&unit]) {
      if (fq.size() > name.size() && fq.ends_with("." + name)) {
        candidates.push_back(fq);
      }
    }
    if (candidates.size() == 1) return candidates.front();
    if (candidates.empty()) {
      Error(pos, "unresolved " + std::string(what) + " '" + name + "'");
    } else {
      std::string list;
      for (const auto& c : candidates) list += (list.empty() ? "" : ", ") + c;
      Error(pos, "ambiguous " + std::string(what) + " '" + name +
                     "' (candidates: " + list + ")");
    }
    return std::nullopt;
  }

  void BuildClassShells() {
    for (const auto& [name, entry] : decls_) {
      const TypeDecl& decl = *entry.decl;
      Class cls;
      cls.name = name;
      cls.pos = decl.pos;
      cls.kind = decl.kind == DeclKind::kInterface ? ClassKind::kInterface
                 : decl.kind == DeclKind::kAbstractClass
                     ? ClassKind::kAbstract
                     : ClassKind::kConcrete;
      for (const auto& member : decl.members) {
        if (const auto* field = std::get_if<FieldDecl>(&member.node)) {
          if (!cls.attributes.insert(field->name).second) {
            Error(field->pos, "duplicate field " + name + "." + field->name);
          }
          continue;
        }
        const auto& method_decl = std::get<MethodDecl>(member.node);
        if (cls.FindMethod(method_decl.name)) {
          Error(method_decl.pos,
                "duplicate method " + name + "." + method_decl.name);
          continue;
        }
        Method method;
        method.name = method_decl.name;
        method.params = method_decl.params;
        method.has_body = method_decl.body.has_value();
        method.pos = method_decl.pos;
        cls.methods.push_back(std::move(method));
      }
      classes_.emplace(name, std::move(cls));
    }

    // Supertypes need every shell to exist for kind checks.
    for (auto& [name, cls] : classes_) {
      const DeclEntry& entry = decls_.at(name);
      const TypeDecl& decl = *entry.decl;
      if (decl.extends) {
        auto target = ResolveClass(*entry.unit, *decl.extends, decl.pos,
                                   "superclass");
        if (target) {
          if (classes_.at(*target).kind == ClassKind::kInterface) {
            Error(decl.pos, "class " + name + " cannot extend interface " +
                                *target + "; use implements");
          } else {
            cls.extends = *target;
          }
        }
      }
      for (const auto& iface : decl.implements) {
        auto target =
            ResolveClass(*entry.unit, iface, decl.pos, "interface");
        if (!target) continue;
        if (classes_.at(*target).kind != ClassKind::kInterface) {
          Error(decl.pos, "class " + name + " implements " + *target +
                              ", which is not an interface");
        } else {
          cls.implements.insert(*target);
        }
      }
    }
  }

  void CheckInheritanceCycles() {
    for (auto& [name, cls] : classes_) {
      std::set<std::string> seen{name};
      const Class* current = &cls;
      while (current->extends) {
        if (*current->extends == name) {
          Error(cls.pos, "inheritance cycle involving " + name);
          break;
        }
        if (!seen.insert(*current->extends).second) break;
        current = &classes_.at(*current->extends);
      }
    }
  }

  // The extends chain from `name` upwards, stopping at any repeat.
  std::vector<const Class*> Chain(const std::string& name) const {
    std::vector<const Class*> chain;
    std::set<std::string> seen;
    const Class* current = &classes_.at(name);
    while (current != nullptr && seen.insert(current->name).second) {
      chain.push_back(current);
      current =
          current->extends ? &classes_.at(*current->extends) : nullptr;
    }
    return chain;
  }

  std::optional<std::string> FindAttributeOwner(const std::string& cls,
                                                const std::string& attr) const {
    for (const Class* c : Chain(cls)) {
      if (c->attributes.contains(attr)) return c->name;
    }
    return std::nullopt;
  }

  std::optional<std::string> FindMethodOwner(const std::string& cls,
                                             const std::string& method) const {
    const auto chain = Chain(cls);
    for (const Class* c : chain) {
      if (c->FindMethod(method)) return c->name;
    }
    for (const Class* c : chain) {
      for (const auto& iface : c->implements) {
        if (classes_.at(iface).FindMethod(method)) return iface;
      }
    }
    return std::nullopt;
  }

  struct BodyContext {
    const SourceUnit* unit;
    const std::string* class_name;
    MethodFacts* facts;
  };

  void LowerBodies() {
    if (!errors_.empty()) return;
    int next_point = 1;
    int next_branch = 1;
    for (auto& [name, cls] : classes_) {
      const DeclEntry& entry = decls_.at(name);
      for (const auto& member : entry.decl->members) {
        const auto* method_decl = std::get_if<MethodDecl>(&member.node);
        if (method_decl == nullptr || !method_decl->body) continue;
        Method* method = nullptr;
        for (auto& m : cls.methods) {
          if (m.name == method_decl->name) method = &m;
        }
        MethodFacts& facts = method->body;
        facts.loc_total = method_decl->lines.total;
        facts.loc_blank = method_decl->lines.blank;
        facts.loc_comment = method_decl->lines.comment;
        BodyContext context{entry.unit, &name, &facts};
        LowerBlock(*method_decl->body, context, next_point, next_branch);
      }
    }
  }

  void LowerBlock(const Block& block, const BodyContext& context,
                  int& next_point, int& next_branch) {
    for (const auto& stmt : block.statements) {
      LowerStatement(stmt, context, next_point, next_branch);
    }
  }

  void LowerStatement(const Stmt& stmt, const BodyContext& context,
                      int& next_point, int& next_branch) {
    MethodFacts& facts = *context.facts;
    auto add_point = [&](const SourcePos& pos) {
      facts.sequence_points.push_back(
          SequencePoint{"sp" + std::to_string(next_point++), pos});
    };
    auto add_branch = [&](const SourcePos& pos) {
      ++facts.decision_points;
      facts.branches.push_back(
          Branch{"br" + std::to_string(next_branch++), 2, pos});
    };

    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          add_point(node.pos);
          if constexpr (std::is_same_v<T, CallStmt>) {
            auto target = ResolveClass(*context.unit, node.target, node.pos,
                                       "call target");
            if (!target) return;
            auto owner = FindMethodOwner(*target, node.method);
            if (!owner) {
              Error(node.pos, "unresolved call target '" + node.target +
                                  "." + node.method + "'");
              return;
            }
            facts.calls.push_back(MethodRef{*owner, node.method});
          } else if constexpr (std::is_same_v<T, AccessStmt>) {
            auto target = ResolveClass(*context.unit, node.owner, node.pos,
                                       "attribute owner");
            if (!target) return;
            auto owner = FindAttributeOwner(*target, node.attribute);
            if (!owner) {
              Error(node.pos, "unresolved attribute '" + node.owner + "." +
                                  node.attribute + "'");
              return;
            }
            facts.attribute_accesses.insert(AttributeRef{*owner, node.attribute});
          } else if constexpr (std::is_same_v<T, AssignStmt>) {
            if (auto owner = FindAttributeOwner(*context.class_name, node.name)) {
              facts.attribute_accesses.insert(AttributeRef{*owner, node.name});
            }
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            add_branch(node.pos);
            LowerBlock(node.then_block, context, next_point, next_branch);
            if (node.else_block) {
              LowerBlock(*node.else_block, context, next_point, next_branch);
            }
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            add_branch(node.pos);
            LowerBlock(node.body, context, next_point, next_branch);
          }
        },
        stmt.node);
  }

  std::vector<const SourceUnit*> units_;
  std::set<std::string> packages_;
  std::map<std::string, DeclEntry> decls_;
  std::map<std::string, std::string> package_of_;
  std::map<const SourceUnit*, std::set<std::string>> imported_;
  std::map<std::string, Class> classes_;
  std::vector<Diagnostic> errors_;
};

}  // namespace

LowerResult Lower(std::span<const SourceUnit> units) {
  return Lowering(units).Run();
}

std::string WriteSymbolListing(const DesignModel& model) {
  std::ostringstream out;
  for (const auto& package : model.packages) {
    for (const auto& cls : package.classes) {
      for (const auto& method : cls.methods) {
        if (!method.has_body) continue;
        const std::string id = cls.name + "." + method.name;
        out << "method " << id << " " << FormatPos(method.pos) << "\n";
        for (const auto& point : method.body.sequence_points) {
          out << "point " << point.id << " " << id << " "
              << FormatPos(point.pos) << "\n";
        }
        for (const auto& branch : method.body.branches) {
          out << "branch " << branch.id << " " << id << " "
              << FormatPos(branch.pos) << "\n";
        }
      }
    }
  }
  return out.str();
}

}  // namespace moometrics
