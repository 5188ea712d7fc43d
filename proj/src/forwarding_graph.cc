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

#include "chainc/forwarding_graph.h"

#include <algorithm>

namespace chainc {

const NodeInstance* ForwardingGraph::find(std::string_view instance_id) const {
  auto it = std::find_if(nodes.begin(), nodes.end(), [&](const auto& node) {
    return node.instance_id == instance_id;
  });
  return it == nodes.end() ? nullptr : &*it;
}

}  // namespace chainc
