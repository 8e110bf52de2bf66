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

#include "moometrics/design_metrics.h"

#include <algorithm>

#include "moometrics/errors.h"

namespace moometrics {

std::string_view ToString(WmcWeighting weighting) {
  return weighting == WmcWeighting::kCyclomatic ? "cyclomatic" : "unit";
}

std::string_view ToString(LocMode mode) {
  switch (mode) {
    case LocMode::kTotal:
      return "total";
    case LocMode::kNoBlank:
      return "no_blank";
    case LocMode::kNoBlankNoComment:
      return "no_blank_no_comment";
  }
  return "total";
}

std::map<std::string, std::int64_t> ModelCounts::AsMap() const {
  return {
      {"packages", packages},
      {"classes", classes},
      {"concrete_classes", concrete_classes},
      {"abstract_classes", abstract_classes},
      {"interfaces", interfaces},
      {"superclasses", superclasses},
      {"subclass_edges", subclass_edges},
      {"implements_edges", implements_edges},
      {"call_edges", call_edges},
      {"access_edges", access_edges},
      {"methods", methods},
      {"attributes", attributes},
  };
}

InstabilityResult Instability(std::int64_t ce, std::int64_t ca) {
  InstabilityResult result;
  if (ce + ca == 0) {
    result.fallback = Rational(0);
  } else {
    result.value = Rational(ce, ca + ce);
  }
  return result;
}

namespace {

std::int64_t LocOf(const MethodFacts& facts, LocMode mode) {
  switch (mode) {
    case LocMode::kTotal:
      return facts.loc_total;
    case LocMode::kNoBlank:
      return facts.loc_total - facts.loc_blank;
    case LocMode::kNoBlankNoComment:
      return facts.loc_total - facts.loc_blank - facts.loc_comment;
  }
  return facts.loc_total;
}

std::int64_t LocOf(const Class& cls, LocMode mode) {
  std::int64_t sum = 0;
  for (const auto& method : cls.methods) sum += LocOf(method.body, mode);
  return sum;
}

}  // namespace

DesignAnalysis::DesignAnalysis(const DesignModel& model) : model_(model) {
  for (const auto& package : model_.packages) {
    auto& members = packages_[package.name];
    for (const auto& cls : package.classes) {
      classes_.emplace(cls.name, &cls);
      package_of_.emplace(cls.name, package.name);
      members.push_back(&cls);
    }
  }

  for (const auto& package : model_.packages) {
    for (const auto& cls : package.classes) {
      auto& refs = references_[cls.name];
      auto& coupled = coupled_to_[cls.name];
      if (cls.extends) {
        refs.insert(*cls.extends);
        ++children_[*cls.extends];
      }
      refs.insert(cls.implements.begin(), cls.implements.end());
      for (const auto& method : cls.methods) {
        for (const auto& call : method.body.calls) {
          refs.insert(call.class_name);
          coupled.insert(call.class_name);
        }
        for (const auto& access : method.body.attribute_accesses) {
          refs.insert(access.class_name);
          coupled.insert(access.class_name);
        }
      }
      refs.erase(cls.name);
      coupled.erase(cls.name);
      for (const auto& target : coupled) {
        coupled_from_[target].insert(cls.name);
      }
    }
  }

  // Package graph, counting each reference fact.
  for (const auto& [name, members] : packages_) {
    package_graph_.nodes.push_back(name);
  }
  package_graph_.graph = Digraph(package_graph_.nodes.size());
  auto node_of = [&](const std::string& package) {
    auto it = std::lower_bound(package_graph_.nodes.begin(),
                               package_graph_.nodes.end(), package);
    return static_cast<std::size_t>(it - package_graph_.nodes.begin());
  };
  auto count_edge = [&](const std::string& from_class,
                        const std::string& to_class) {
    const std::string& from = package_of_.at(from_class);
    const std::string& to = package_of_.at(to_class);
    if (from == to) return;
    auto key = std::pair(node_of(from), node_of(to));
    if (package_graph_.multiplicity[key]++ == 0) {
      package_graph_.graph.AddEdge(key.first, key.second);
    }
  };
  for (const auto& package : model_.packages) {
    for (const auto& cls : package.classes) {
      if (cls.extends) count_edge(cls.name, *cls.extends);
      for (const auto& iface : cls.implements) count_edge(cls.name, iface);
      for (const auto& method : cls.methods) {
        for (const auto& call : method.body.calls) {
          count_edge(cls.name, call.class_name);
        }
        for (const auto& access : method.body.attribute_accesses) {
          count_edge(cls.name, access.class_name);
        }
      }
    }
  }
}

const Class& DesignAnalysis::FindClass(std::string_view name) const {
  auto it = classes_.find(std::string(name));
  if (it == classes_.end()) {
    throw LookupError("unknown class " + std::string(name));
  }
  return *it->second;
}

const std::string& DesignAnalysis::PackageOf(std::string_view cls) const {
  auto it = package_of_.find(std::string(cls));
  if (it == package_of_.end()) {
    throw LookupError("unknown class " + std::string(cls));
  }
  return it->second;
}

const std::vector<const Class*>& DesignAnalysis::ClassesIn(
    std::string_view package) const {
  auto it = packages_.find(package);
  if (it == packages_.end()) {
    throw LookupError("unknown package " + std::string(package));
  }
  return it->second;
}

bool DesignAnalysis::InSubtree(const std::string& package,
                               const std::string& root) const {
  return package == root ||
         (package.size() > root.size() && package.starts_with(root) &&
          package[root.size()] == '.');
}

ModelCounts DesignAnalysis::Counts() const {
  ModelCounts counts;
  counts.packages = static_cast<std::int64_t>(model_.packages.size());
  std::set<std::string> extended;
  for (const auto& package : model_.packages) {
    for (const auto& cls : package.classes) {
      ++counts.classes;
      switch (cls.kind) {
        case ClassKind::kConcrete:
          ++counts.concrete_classes;
          break;
        case ClassKind::kAbstract:
          ++counts.abstract_classes;
          break;
        case ClassKind::kInterface:
          ++counts.interfaces;
          break;
      }
      if (cls.extends) {
        ++counts.subclass_edges;
        extended.insert(*cls.extends);
      }
      counts.implements_edges += static_cast<std::int64_t>(cls.implements.size());
      counts.attributes += static_cast<std::int64_t>(cls.attributes.size());
      counts.methods += static_cast<std::int64_t>(cls.methods.size());
      for (const auto& method : cls.methods) {
        counts.call_edges += static_cast<std::int64_t>(method.body.calls.size());
        counts.access_edges +=
            static_cast<std::int64_t>(method.body.attribute_accesses.size());
      }
    }
  }
  counts.superclasses = static_cast<std::int64_t>(extended.size());
  return counts;
}

std::int64_t DesignAnalysis::Loc(LocScope scope, std::string_view id,
                                 LocMode mode) const {
  switch (scope) {
    case LocScope::kMethod: {
      auto dot = id.rfind('.');
      if (dot == std::string_view::npos) {
        throw LookupError("unknown method " + std::string(id));
      }
      const Class& cls = FindClass(id.substr(0, dot));
      const Method* method = cls.FindMethod(id.substr(dot + 1));
      if (method == nullptr) {
        throw LookupError("unknown method " + std::string(id));
      }
      return LocOf(method->body, mode);
    }
    case LocScope::kClass:
      return LocOf(FindClass(id), mode);
    case LocScope::kPackage: {
      std::int64_t sum = 0;
      for (const Class* cls : ClassesIn(id)) sum += LocOf(*cls, mode);
      return sum;
    }
  }
  return 0;
}

std::optional<Rational> DesignAnalysis::Wmc(std::string_view name,
                                            WmcWeighting weighting) const {
  const Class& cls = FindClass(name);
  if (cls.kind == ClassKind::kInterface) return std::nullopt;
  std::int64_t sum = 0;
  for (const auto& method : cls.methods) {
    sum += weighting == WmcWeighting::kCyclomatic
               ? 1 + method.body.decision_points
               : 1;
  }
  return Rational(sum);
}

std::int64_t DesignAnalysis::Rfc(std::string_view name) const {
  const Class& cls = FindClass(name);
  std::set<std::string> response;
  for (const auto& method : cls.methods) {
    response.insert(cls.name + "." + method.name);
    for (const auto& call : method.body.calls) {
      response.insert(call.Qualified());
    }
  }
  return static_cast<std::int64_t>(response.size());
}

std::int64_t DesignAnalysis::Noc(std::string_view name) const {
  const Class& cls = FindClass(name);
  auto it = children_.find(cls.name);
  return it == children_.end() ? 0 : it->second;
}

std::int64_t DesignAnalysis::Dit(std::string_view name) const {
  const Class* current = &FindClass(name);
  std::int64_t depth = 0;
  while (current->extends) {
    ++depth;
    current = &FindClass(*current->extends);
  }
  return depth;
}

std::int64_t DesignAnalysis::Cbo(std::string_view name,
                                 bool include_fan_in) const {
  const Class& cls = FindClass(name);
  std::set<std::string> coupled = coupled_to_.at(cls.name);
  if (include_fan_in) {
    if (auto it = coupled_from_.find(cls.name); it != coupled_from_.end()) {
      coupled.insert(it->second.begin(), it->second.end());
    }
  }
  return static_cast<std::int64_t>(coupled.size());
}

std::int64_t DesignAnalysis::Lcom(std::string_view name) const {
  const Class& cls = FindClass(name);
  std::vector<std::set<std::string>> used;
  used.reserve(cls.methods.size());
  for (const auto& method : cls.methods) {
    std::set<std::string> own;
    for (const auto& access : method.body.attribute_accesses) {
      if (access.class_name == cls.name) own.insert(access.attribute_name);
    }
    used.push_back(std::move(own));
  }
  std::int64_t disjoint = 0;
  for (std::size_t i = 0; i < used.size(); ++i) {
    for (std::size_t j = i + 1; j < used.size(); ++j) {
      bool shares = std::any_of(used[i].begin(), used[i].end(),
                                [&](const std::string& attribute) {
                                  return used[j].contains(attribute);
                                });
      if (!shares) ++disjoint;
    }
  }
  return disjoint;
}

PackageCoupling DesignAnalysis::Coupling(std::string_view package) const {
  const auto& members = ClassesIn(package);
  const std::string name(package);
  std::set<std::string> efferent;
  for (const Class* cls : members) {
    for (const auto& target : references_.at(cls->name)) {
      if (package_of_.at(target) != name) efferent.insert(target);
    }
  }
  std::set<std::string> afferent;
  for (const auto& [source, targets] : references_) {
    if (package_of_.at(source) == name) continue;
    for (const auto& target : targets) {
      if (package_of_.at(target) == name) {
        afferent.insert(source);
        break;
      }
    }
  }
  return PackageCoupling{static_cast<std::int64_t>(efferent.size()),
                         static_cast<std::int64_t>(afferent.size())};
}

std::optional<Rational> DesignAnalysis::Abstractness(
    std::string_view package) const {
  const auto& members = ClassesIn(package);
  if (members.empty()) return std::nullopt;
  std::int64_t abstract = 0;
  for (const Class* cls : members) {
    if (cls->kind != ClassKind::kConcrete) ++abstract;
  }
  return Rational(abstract, static_cast<std::int64_t>(members.size()));
}

std::optional<Rational> DesignAnalysis::Dip(std::string_view package) const {
  const auto& members = ClassesIn(package);
  const std::string name(package);
  std::int64_t outgoing = 0;
  std::int64_t to_abstract = 0;
  for (const Class* cls : members) {
    for (const auto& target : references_.at(cls->name)) {
      if (package_of_.at(target) == name) continue;
      ++outgoing;
      if (classes_.at(target)->kind != ClassKind::kConcrete) ++to_abstract;
    }
  }
  if (outgoing == 0) return std::nullopt;
  return Rational(to_abstract, outgoing);
}

Rational DesignAnalysis::EpPercent(std::string_view package) const {
  ClassesIn(package);  // existence check
  const std::string root(package);
  std::vector<std::string> children;
  for (const auto& [name, members] : packages_) {
    if (name.size() > root.size() + 1 && name.starts_with(root) &&
        name[root.size()] == '.' &&
        name.find('.', root.size() + 1) == std::string::npos) {
      children.push_back(name);
    }
  }
  if (children.empty()) return Rational(100);

  std::int64_t used = 0;
  for (const auto& child : children) {
    bool used_outside = false;
    for (const auto& [source, targets] : references_) {
      if (InSubtree(package_of_.at(source), root)) continue;
      for (const auto& target : targets) {
        if (InSubtree(package_of_.at(target), child)) {
          used_outside = true;
          break;
        }
      }
      if (used_outside) break;
    }
    if (used_outside) ++used;
  }
  return Rational(100) *
         (Rational(1) - Rational(used, static_cast<std::int64_t>(children.size())));
}

AdpResult DesignAnalysis::Adp() const {
  AdpResult result;
  for (const auto& component : CyclicComponents(package_graph_.graph)) {
    std::vector<std::string> names;
    for (std::size_t node : component) {
      names.push_back(package_graph_.nodes[node]);
    }
    result.cycles.push_back(std::move(names));
  }
  std::sort(result.cycles.begin(), result.cycles.end());
  result.acyclic = result.cycles.empty();
  return result;
}

std::vector<ClassMetrics> DesignAnalysis::AllClassMetrics(
    bool cbo_include_fan_in) const {
  std::vector<ClassMetrics> all;
  for (const auto& package : model_.packages) {
    for (const auto& cls : package.classes) {
      ClassMetrics metrics;
      metrics.name = cls.name;
      metrics.wmc_cyclomatic = Wmc(cls.name, WmcWeighting::kCyclomatic);
      metrics.wmc_unit = Wmc(cls.name, WmcWeighting::kUnit);
      metrics.rfc = Rfc(cls.name);
      metrics.noc = Noc(cls.name);
      metrics.dit = Dit(cls.name);
      metrics.cbo = Cbo(cls.name, cbo_include_fan_in);
      metrics.lcom = Lcom(cls.name);
      all.push_back(std::move(metrics));
    }
  }
  return all;
}

std::vector<PackageMetrics> DesignAnalysis::AllPackageMetrics() const {
  std::vector<PackageMetrics> all;
  for (const auto& package : model_.packages) {
    PackageMetrics metrics;
    metrics.name = package.name;
    PackageCoupling coupling = Coupling(package.name);
    metrics.ce = coupling.ce;
    metrics.ca = coupling.ca;
    metrics.instability = Instability(coupling.ce, coupling.ca);
    metrics.abstractness = Abstractness(package.name);
    metrics.dip = Dip(package.name);
    metrics.ep_percent = EpPercent(package.name);
    all.push_back(std::move(metrics));
  }
  return all;
}

}  // namespace moometrics
