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

#ifndef MOOMETRICS_GRAPH_H_
#define MOOMETRICS_GRAPH_H_

#include <cstddef>
#include <span>
#include <vector>

namespace moometrics {

// Directed graph over nodes 0..size()-1. Parallel edges and self-loops are
// allowed.
class Digraph {
 public:
  explicit Digraph(std::size_t node_count) : adjacency_(node_count) {}

  void AddEdge(std::size_t from, std::size_t to);
  bool HasEdge(std::size_t from, std::size_t to) const;

  std::size_t size() const { return adjacency_.size(); }
  std::span<const std::size_t> Successors(std::size_t node) const {
    return adjacency_[node];
  }

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
};

// Tarjan's algorithm without recursion. Members of each component are
// sorted; components come out in reverse topological order.
std::vector<std::vector<std::size_t>> StronglyConnectedComponents(
    const Digraph& graph);

// Components that contain a cycle: two or more members, or one member with
// a self-loop. Sorted by first member.
std::vector<std::vector<std::size_t>> CyclicComponents(const Digraph& graph);

}  // namespace moometrics

#endif  // MOOMETRICS_GRAPH_H_
