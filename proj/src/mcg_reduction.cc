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

#include "mfp/mcg_reduction.h"

#include <set>
#include <stdexcept>
#include <string>

namespace mfp {

NetworkGraph ReduceMcg(const McgInstance& instance) {
  const int num_sets = static_cast<int>(instance.sets.size());
  const int num_groups = static_cast<int>(instance.groups.size());
  if (num_sets == 0 || num_groups == 0) {
    throw std::invalid_argument("instance needs at least one set and group");
  }
  if (instance.budget < 1) throw std::invalid_argument("budget must be >= 1");

  std::vector<int> group_of(num_sets, -1);
  for (int j = 0; j < num_groups; ++j) {
    if (instance.groups[j].empty()) {
      throw std::invalid_argument("group " + std::to_string(j) + " is empty");
    }
    for (int i : instance.groups[j]) {
      if (i < 0 || i >= num_sets || group_of[i] >= 0) {
        throw std::invalid_argument("groups must partition the sets");
      }
      group_of[i] = j;
    }
  }
  std::set<int> covered;
  for (int i = 0; i < num_sets; ++i) {
    if (group_of[i] < 0) throw std::invalid_argument("set without a group");
    if (instance.sets[i].empty()) {
      throw std::invalid_argument("set " + std::to_string(i) + " is empty");
    }
    for (int t : instance.sets[i]) {
      if (t < 0 || t >= instance.num_elements) {
        throw std::invalid_argument("element out of range");
      }
      covered.insert(t);
    }
  }

  GraphBuilder b;
  b.AddNode("S");
  const auto element = [](int t) { return "E" + std::to_string(t); };
  const auto set = [](int i) { return "C" + std::to_string(i); };
  const auto sink_side = [](int t) { return "D" + std::to_string(t); };
  const auto group = [](int j) { return "G" + std::to_string(j); };

  for (int t : covered) b.AddEdge("S", element(t));
  for (int i = 0; i < num_sets; ++i) {
    for (int t : std::set<int>(instance.sets[i].begin(),
                               instance.sets[i].end())) {
      b.AddEdge(element(t), set(i));
      b.AddEdge(set(i), sink_side(t));
      b.AddEdge(set(i), sink_side(t));
    }
  }
  b.AddNode("T");
  for (int t : covered) b.AddEdge(sink_side(t), "T");

  const bool hub = instance.budget < num_groups;
  if (hub) {
    for (int r = 0; r < instance.budget; ++r) b.AddEdge("S", "K");
  }
  for (int j = 0; j < num_groups; ++j) {
    b.AddEdge(hub ? "K" : "S", group(j));
    for (int i : instance.groups[j]) b.AddEdge(group(j), set(i));
  }
  b.SetSource("S");
  b.SetSink("T");
  return b.Build();
}

}  // namespace mfp
