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

#ifndef CHAINC_FORWARDING_GRAPH_H_
#define CHAINC_FORWARDING_GRAPH_H_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "chainc/names.h"

namespace chainc {

enum class NodeRole { kPlain, kSplitter };

struct NodeInstance {
  // Path-structured and unique per graph, e.g. `c0/k0/b1r2/c1/k0/A`.
  std::string instance_id;
  FunctionName function;
  NodeRole role = NodeRole::kPlain;
  friend bool operator==(const NodeInstance&, const NodeInstance&) = default;
};

struct Edge {
  std::string from;
  std::string to;
  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class FlexKind { kBestBinding, kAllBindings };

// Residual ordering freedom (best-binding) or traverse-all obligation
// (all-bindings) over a set of nodes, left for downstream optimizers.
struct FlexGroup {
  FlexKind kind = FlexKind::kAllBindings;
  std::vector<std::string> members;
  friend bool operator==(const FlexGroup&, const FlexGroup&) = default;
};

struct ForwardingGraph {
  std::vector<NodeInstance> nodes;  // creation order
  std::vector<Edge> edges;          // sorted, unique
  std::vector<std::string> entries;
  std::vector<std::string> exits;
  std::vector<FlexGroup> flex_groups;

  const NodeInstance* find(std::string_view instance_id) const;

  friend bool operator==(const ForwardingGraph&, const ForwardingGraph&) =
      default;
};

}  // namespace chainc

#endif  // CHAINC_FORWARDING_GRAPH_H_
