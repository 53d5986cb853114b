// Copyright 2026 The maxflow-protection Authors.
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

#include "mfp/residual_network.h"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace mfp {

ResidualNetwork::ResidualNetwork(int num_nodes) : out_(num_nodes) {}

int ResidualNetwork::AddNode() {
  out_.emplace_back();
  return num_nodes() - 1;
}

int ResidualNetwork::AddEdge(int tail, int head, int capacity) {
  if (tail < 0 || head < 0 || tail >= num_nodes() || head >= num_nodes()) {
    throw std::out_of_range("ResidualNetwork::AddEdge: node out of range");
  }
  const int arc = static_cast<int>(arcs_.size());
  arcs_.push_back({head, capacity, 0});
  arcs_.push_back({tail, 0, 0});
  out_[tail].push_back(arc);
  out_[head].push_back(arc + 1);
  return arc;
}

void ResidualNetwork::SetEdgeCapacity(int edge, int capacity) {
  Arc& arc = arcs_[2 * edge];
  if (capacity < arc.flow) {
    throw std::logic_error("SetEdgeCapacity below current flow");
  }
  arc.capacity = capacity;
}

void ResidualNetwork::Push(int arc, int amount) {
  arcs_[arc].flow += amount;
  arcs_[arc ^ 1].flow -= amount;
}

std::optional<std::vector<int>> ResidualNetwork::FindPath(
    int from, int to, Search search) const {
  if (from == to) return std::vector<int>{};
  std::vector<int> parent_arc(num_nodes(), -1);
  std::vector<bool> seen(num_nodes(), false);
  seen[from] = true;
  bool found = false;
  if (search == Search::kBfs) {
    std::deque<int> queue{from};
    while (!queue.empty() && !found) {
      const int node = queue.front();
      queue.pop_front();
      for (const int arc : out_[node]) {
        const int next = arcs_[arc].head;
        if (seen[next] || residual(arc) <= 0) continue;
        seen[next] = true;
        parent_arc[next] = arc;
        if (next == to) {
          found = true;
          break;
        }
        queue.push_back(next);
      }
    }
  } else {
    // Iterative DFS with an explicit arc cursor per stack frame.
    std::vector<std::pair<int, size_t>> stack{{from, 0}};
    while (!stack.empty() && !found) {
      auto& [node, cursor] = stack.back();
      if (cursor == out_[node].size()) {
        stack.pop_back();
        continue;
      }
      const int arc = out_[node][cursor++];
      const int next = arcs_[arc].head;
      if (seen[next] || residual(arc) <= 0) continue;
      seen[next] = true;
      parent_arc[next] = arc;
      if (next == to) {
        found = true;
      } else {
        stack.emplace_back(next, 0);
      }
    }
  }
  if (!found) return std::nullopt;
  std::vector<int> path;
  for (int node = to; node != from; node = tail(parent_arc[node])) {
    path.push_back(parent_arc[node]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

int ResidualNetwork::Augment(int from, int to, int limit, Search search) {
  int pushed = 0;
  while (pushed < limit) {
    const auto path = FindPath(from, to, search);
    if (!path || path->empty()) break;
    for (const int arc : *path) Push(arc, 1);
    ++pushed;
  }
  return pushed;
}

int ResidualNetwork::MaxFlowValue(int from, int to, int limit) const {
  ResidualNetwork scratch = *this;
  return scratch.Augment(from, to, limit);
}

std::vector<bool> ResidualNetwork::ReachableFrom(int from) const {
  std::vector<bool> seen(num_nodes(), false);
  std::vector<int> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const int node = stack.back();
    stack.pop_back();
    for (const int arc : out_[node]) {
      const int next = arcs_[arc].head;
      if (!seen[next] && residual(arc) > 0) {
        seen[next] = true;
        stack.push_back(next);
      }
    }
  }
  return seen;
}

std::vector<bool> ResidualNetwork::CoReachable(int to) const {
  // Walk arcs backwards: arc a = (u -> v) with residual; from v we look at
  // the twin arcs stored in out_[v], whose twin is the arc into v.
  std::vector<bool> seen(num_nodes(), false);
  std::vector<int> stack{to};
  seen[to] = true;
  while (!stack.empty()) {
    const int node = stack.back();
    stack.pop_back();
    for (const int twin : out_[node]) {
      const int arc = twin ^ 1;  // arc entering `node`
      const int prev = arcs_[twin].head;
      if (!seen[prev] && residual(arc) > 0) {
        seen[prev] = true;
        stack.push_back(prev);
      }
    }
  }
  return seen;
}

int ResidualNetwork::Inflow(int node) const {
  int total = 0;
  for (const int arc : out_[node]) {
    if (arc & 1) total += arcs_[arc ^ 1].flow;
  }
  return total;
}

int ResidualNetwork::Outflow(int node) const {
  int total = 0;
  for (const int arc : out_[node]) {
    if (!(arc & 1)) total += arcs_[arc].flow;
  }
  return total;
}

int ResidualNetwork::NetOutflow(int node) const {
  return Outflow(node) - Inflow(node);
}

}  // namespace mfp
