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

// Shared helpers for the unit tests.

#ifndef MFP_TESTS_TEST_UTIL_H_
#define MFP_TESTS_TEST_UTIL_H_

#include <string>
#include <vector>

#include "mfp/graph.h"

namespace mfp::testing {

inline NetworkGraph Fixture(const std::string& name) {
  return ReadGraphFile(std::string(MFP_TEST_DATA_DIR) + "/" + name + ".graph");
}

inline std::vector<std::string> EdgeNames(const NetworkGraph& g,
                                          const std::vector<EdgeId>& edges) {
  std::vector<std::string> out;
  for (const EdgeId e : edges) {
    out.push_back(g.name(g.edge(e).tail) + "->" + g.name(g.edge(e).head));
  }
  return out;
}

inline std::vector<std::string> NodeNames(const NetworkGraph& g,
                                          const std::vector<NodeId>& nodes) {
  std::vector<std::string> out;
  for (const NodeId u : nodes) out.push_back(g.name(u));
  return out;
}

}  // namespace mfp::testing

#endif  // MFP_TESTS_TEST_UTIL_H_
