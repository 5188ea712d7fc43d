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

#include "chainc/cost_model.h"

#include <cmath>
#include <map>
#include <set>

#include "chainc/diagnostic.h"

namespace chainc {

CostModel::CostModel(std::string name, Function function)
    : name_(std::move(name)), function_(std::move(function)) {}

CostModel CostModel::EdgeCount() {
  return CostModel("edge-count", [](const ForwardingGraph& graph) {
    return static_cast<double>(graph.edges.size());
  });
}

CostModel CostModel::AdjacencyPreference(std::vector<OrderPreference> prefs) {
  std::set<std::pair<std::string, std::string>> wanted;
  for (const OrderPreference& pref : prefs) {
    wanted.emplace(pref.before.str(), pref.after.str());
  }
  return CostModel(
      "adjacency-pref", [wanted = std::move(wanted)](const ForwardingGraph& g) {
        std::map<std::string_view, std::string_view> function_of;
        for (const NodeInstance& node : g.nodes) {
          function_of.emplace(node.instance_id, node.function.str());
        }
        double violations = 0;
        for (const Edge& edge : g.edges) {
          std::string from(function_of.at(edge.from));
          std::string to(function_of.at(edge.to));
          if (wanted.count({to, from})) ++violations;
        }
        return violations;
      });
}

double CostModel::operator()(const ForwardingGraph& graph) const {
  double value = function_(graph);
  if (!std::isfinite(value)) {
    throw Error(Code::kInvalidCost,
                "cost model '" + name_ + "' returned a non-finite value");
  }
  return value;
}

}  // namespace chainc
