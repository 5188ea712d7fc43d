// Copyright 2026 The chainc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHAINC_GRAPH_EMIT_H_
#define CHAINC_GRAPH_EMIT_H_

#include <string>
#include <vector>

#include "chainc/diagnostic.h"
#include "chainc/forwarding_graph.h"

namespace chainc {

// Graphviz text. Nodes and edges are sorted by instance id; each flex group
// becomes a `cluster_<n>` subgraph. Splitters are diamonds; entries and exits
// get one extra periphery each.
std::string ToDot(const ForwardingGraph& graph);

struct GraphStats {
  size_t node_count = 0;
  size_t edge_count = 0;
  size_t entry_count = 0;
  size_t exit_count = 0;
  size_t flex_group_count = 0;
  // Some node without successors is not a service exit.
  bool has_dangling_exits = false;
  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

GraphStats ComputeGraphStats(const ForwardingGraph& graph);

// `nodes=N edges=E entries=I exits=O flexgroups=F`
std::string FormatStats(const GraphStats& stats);

// E_UNREACHABLE_NODE per node that no entry reaches.
std::vector<Diagnostic> ReachabilityCheck(const ForwardingGraph& graph);

}  // namespace chainc

#endif  // CHAINC_GRAPH_EMIT_H_
