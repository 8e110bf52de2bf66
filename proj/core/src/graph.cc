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

#include "moometrics/graph.h"

#include <algorithm>
#include <limits>

namespace moometrics {

void Digraph::AddEdge(std::size_t from, std::size_t to) {
  adjacency_[from].push_back(to);
}

bool Digraph::HasEdge(std::size_t from, std::size_t to) const {
  const auto& successors = adjacency_[from];
  return std::find(successors.begin(), successors.end(), to) !=
         successors.end();
}

std::vector<std::vector<std::size_t>> StronglyConnectedComponents(
    const Digraph& graph) {
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = graph.size();
  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t next_index = 0;

  // (node, position of the next successor to examine)
  std::vector<std::pair<std::size_t, std::size_t>> call_stack;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call_stack.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call_stack.empty()) {
      auto& [node, next] = call_stack.back();
      auto successors = graph.Successors(node);
      if (next < successors.size()) {
        std::size_t succ = successors[next++];
        if (index[succ] == kUnvisited) {
          index[succ] = low[succ] = next_index++;
          stack.push_back(succ);
          on_stack[succ] = true;
          call_stack.emplace_back(succ, 0);
        } else if (on_stack[succ]) {
          low[node] = std::min(low[node], index[succ]);
        }
        continue;
      }

      const std::size_t finished = node;
      call_stack.pop_back();
      if (!call_stack.empty()) {
        std::size_t parent = call_stack.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
      if (low[finished] == index[finished]) {
        std::vector<std::size_t> component;
        std::size_t member;
        do {
          member = stack.back();
          stack.pop_back();
          on_stack[member] = false;
          component.push_back(member);
        } while (member != finished);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

std::vector<std::vector<std::size_t>> CyclicComponents(const Digraph& graph) {
  std::vector<std::vector<std::size_t>> cyclic;
  for (auto& component : StronglyConnectedComponents(graph)) {
    if (component.size() >= 2 ||
        graph.HasEdge(component.front(), component.front())) {
      cyclic.push_back(std::move(component));
    }
  }
  std::sort(cyclic.begin(), cyclic.end());
  return cyclic;
}

}  // namespace moometrics
