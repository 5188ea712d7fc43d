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

#include "chainc/graph_emit.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace chainc {
namespace {

std::string Quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string ToDot(const ForwardingGraph& graph) {
  std::set<std::string_view> entries(graph.entries.begin(),
                                     graph.entries.end());
  std::set<std::string_view> exits(graph.exits.begin(), graph.exits.end());
  std::vector<const NodeInstance*> nodes;
  for (const NodeInstance& node : graph.nodes) nodes.push_back(&node);
  std::sort(nodes.begin(), nodes.end(), [](const auto* a, const auto* b) {
    return a->instance_id < b->instance_id;
  });
  std::vector<Edge> edges = graph.edges;
  std::sort(edges.begin(), edges.end());

  std::ostringstream out;
  out << "digraph chainc {\n";
  out << "  rankdir=LR;\n";
  for (const NodeInstance* node : nodes) {
    int peripheries = 1 + entries.count(node->instance_id) +
                      exits.count(node->instance_id);
    out << "  " << Quote(node->instance_id)
        << " [label=" << Quote(node->function.str());
    if (node->role == NodeRole::kSplitter) out << ", shape=diamond";
    if (peripheries > 1) out << ", peripheries=" << peripheries;
    out << "];\n";
  }
  for (size_t i = 0; i < graph.flex_groups.size(); ++i) {
    const FlexGroup& group = graph.flex_groups[i];
    std::vector<std::string> members = group.members;
    std::sort(members.begin(), members.end());
    out << "  subgraph cluster_" << i << " {\n";
    out << "    label="
        << Quote(group.kind == FlexKind::kBestBinding ? "best-binding"
                                                      : "all-bindings")
        << ";\n";
    for (const std::string& member : members) {
      out << "    " << Quote(member) << ";\n";
    }
    out << "  }\n";
  }
  for (const Edge& edge : edges) {
    out << "  " << Quote(edge.from) << " -> " << Quote(edge.to) << ";\n";
  }
  out << "}\n";
  return out.str();
}

GraphStats ComputeGraphStats(const ForwardingGraph& graph) {
  GraphStats stats;
  stats.node_count = graph.nodes.size();
  stats.edge_count = graph.edges.size();
  stats.entry_count = graph.entries.size();
  stats.exit_count = graph.exits.size();
  stats.flex_group_count = graph.flex_groups.size();
  std::set<std::string_view> has_successor;
  for (const Edge& edge : graph.edges) has_successor.insert(edge.from);
  std::set<std::string_view> exits(graph.exits.begin(), graph.exits.end());
  stats.has_dangling_exits =
      std::any_of(graph.nodes.begin(), graph.nodes.end(), [&](const auto& n) {
        return !has_successor.count(n.instance_id) &&
               !exits.count(n.instance_id);
      });
  return stats;
}

std::string FormatStats(const GraphStats& stats) {
  std::ostringstream out;
  out << "nodes=" << stats.node_count << " edges=" << stats.edge_count
      << " entries=" << stats.entry_count << " exits=" << stats.exit_count
      << " flexgroups=" << stats.flex_group_count;
  return out.str();
}

std::vector<Diagnostic> ReachabilityCheck(const ForwardingGraph& graph) {
  std::map<std::string_view, std::vector<std::string_view>> successors;
  for (const Edge& edge : graph.edges) {
    successors[edge.from].push_back(edge.to);
  }
  std::set<std::string_view> seen;
  std::vector<std::string_view> stack(graph.entries.begin(),
                                      graph.entries.end());
  while (!stack.empty()) {
    std::string_view node = stack.back();
    stack.pop_back();
    if (!seen.insert(node).second) continue;
    for (std::string_view next : successors[node]) stack.push_back(next);
  }
  std::vector<Diagnostic> out;
  for (const NodeInstance& node : graph.nodes) {
    if (!seen.count(node.instance_id)) {
      out.push_back(MakeError(Code::kUnreachableNode,
                              "node is not reachable from any entry",
                              node.instance_id));
    }
  }
  return out;
}

}  // namespace chainc
