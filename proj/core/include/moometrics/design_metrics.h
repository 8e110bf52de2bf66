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

// Class-level (CK) and package-level (coupling, instability, abstractness,
// dependency principles) metrics over a validated DesignModel.
//
// Terminology used below:
//   reference   a call, attribute access, extends, or implements edge from
//               one class to a different class.
//   coupling    a call or attribute access edge only (what CBO counts).
//   subtree(p)  package p and every package whose name starts with "p.".
//   child of p  a declared package named "p.<segment>" (one more segment).

#ifndef MOOMETRICS_DESIGN_METRICS_H_
#define MOOMETRICS_DESIGN_METRICS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "moometrics/graph.h"
#include "moometrics/model.h"
#include "moometrics/rational.h"

namespace moometrics {

enum class WmcWeighting { kCyclomatic, kUnit };
enum class LocScope { kMethod, kClass, kPackage };
enum class LocMode { kTotal, kNoBlank, kNoBlankNoComment };

std::string_view ToString(WmcWeighting weighting);
std::string_view ToString(LocMode mode);

struct ModelCounts {
  std::int64_t packages = 0;
  std::int64_t classes = 0;  // all kinds
  std::int64_t concrete_classes = 0;
  std::int64_t abstract_classes = 0;
  std::int64_t interfaces = 0;
  std::int64_t superclasses = 0;  // classes extended by at least one class
  std::int64_t subclass_edges = 0;
  std::int64_t implements_edges = 0;
  std::int64_t call_edges = 0;    // call facts, with multiplicity
  std::int64_t access_edges = 0;  // attribute access facts
  std::int64_t methods = 0;
  std::int64_t attributes = 0;

  // Keyed by the field names above.
  std::map<std::string, std::int64_t> AsMap() const;
  bool operator==(const ModelCounts&) const = default;
};

struct PackageCoupling {
  std::int64_t ce = 0;  // outside classes referenced from inside
  std::int64_t ca = 0;  // outside classes referencing something inside
  bool operator==(const PackageCoupling&) const = default;
};

struct InstabilityResult {
  std::optional<Rational> value;     // ce / (ca + ce)
  std::optional<Rational> fallback;  // 0 when ca + ce == 0
};

// ce / (ca + ce); an isolated package is not applicable with fallback 0.
InstabilityResult Instability(std::int64_t ce, std::int64_t ca);

struct AdpResult {
  bool acyclic = true;
  // Each cycle's member packages, sorted; cycles sorted.
  std::vector<std::vector<std::string>> cycles;
};

// Package dependency graph: an edge p -> q (p != q) when any class in p
// references any class in q. `multiplicity` counts the reference facts.
struct DependencyGraph {
  std::vector<std::string> nodes;  // sorted package names
  Digraph graph{0};
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> multiplicity;
};

struct ClassMetrics {
  std::string name;
  std::optional<Rational> wmc_cyclomatic;  // absent for interfaces
  std::optional<Rational> wmc_unit;
  std::int64_t rfc = 0;
  std::int64_t noc = 0;
  std::int64_t dit = 0;
  std::int64_t cbo = 0;
  std::int64_t lcom = 0;
};

struct PackageMetrics {
  std::string name;
  std::int64_t ce = 0;
  std::int64_t ca = 0;
  InstabilityResult instability;
  std::optional<Rational> abstractness;
  std::optional<Rational> dip;
  Rational ep_percent;
};

// Indexes a DesignModel once and answers metric queries against it. The
// model must outlive the analysis. Unknown class, package, or method names
// throw LookupError.
class DesignAnalysis {
 public:
  explicit DesignAnalysis(const DesignModel& model);

  const DesignModel& model() const { return model_; }

  ModelCounts Counts() const;

  // Sum of the selected per-method line counts over a method ("p.C.m"),
  // class ("p.C") or package ("p").
  std::int64_t Loc(LocScope scope, std::string_view id, LocMode mode) const;

  // Sum over declared methods of 1 + decision points (cyclomatic) or 1
  // (unit). Inherited methods are excluded. Interfaces: not applicable.
  std::optional<Rational> Wmc(std::string_view cls,
                              WmcWeighting weighting) const;

  // |declared methods ∪ methods they call directly|, one level deep.
  std::int64_t Rfc(std::string_view cls) const;

  // Direct subclasses via extends.
  std::int64_t Noc(std::string_view cls) const;

  // Hops along extends to the root; roots and interfaces are 0.
  std::int64_t Dit(std::string_view cls) const;

  // Distinct other classes this class calls or whose attributes it accesses;
  // with `include_fan_in`, also the distinct classes coupled to it.
  std::int64_t Cbo(std::string_view cls, bool include_fan_in = false) const;

  // Unordered pairs of declared methods whose sets of accessed own
  // attributes are disjoint. A method touching no own attribute shares with
  // nothing.
  std::int64_t Lcom(std::string_view cls) const;

  PackageCoupling Coupling(std::string_view package) const;

  // (abstract classes + interfaces) / all classes; absent for an empty
  // package.
  std::optional<Rational> Abstractness(std::string_view package) const;

  // Over distinct (inside class, outside class) reference pairs leaving the
  // package: the fraction whose target is abstract or an interface. Absent
  // when nothing leaves the package.
  std::optional<Rational> Dip(std::string_view package) const;

  // 100 * (1 - children used from outside subtree(p) / children), where a
  // child is used when a class outside subtree(p) references a class in the
  // child's subtree. 100 when p has no children.
  Rational EpPercent(std::string_view package) const;

  AdpResult Adp() const;
  const DependencyGraph& PackageGraph() const { return package_graph_; }

  // Every class / package in model order.
  std::vector<ClassMetrics> AllClassMetrics(bool cbo_include_fan_in) const;
  std::vector<PackageMetrics> AllPackageMetrics() const;

  // Classes declared in exactly this package.
  const std::vector<const Class*>& ClassesIn(std::string_view package) const;
  const Class& FindClass(std::string_view name) const;
  const std::string& PackageOf(std::string_view cls) const;

 private:
  bool InSubtree(const std::string& package, const std::string& root) const;

  const DesignModel& model_;
  std::unordered_map<std::string, const Class*> classes_;
  std::unordered_map<std::string, std::string> package_of_;
  std::map<std::string, std::vector<const Class*>, std::less<>> packages_;
  // Reference and coupling targets per class, self excluded.
  std::unordered_map<std::string, std::set<std::string>> references_;
  std::unordered_map<std::string, std::set<std::string>> coupled_to_;
  std::unordered_map<std::string, std::set<std::string>> coupled_from_;
  std::unordered_map<std::string, std::int64_t> children_;
  DependencyGraph package_graph_;
};

}  // namespace moometrics

#endif  // MOOMETRICS_DESIGN_METRICS_H_
