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

#ifndef CHAINC_COST_MODEL_H_
#define CHAINC_COST_MODEL_H_

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "chainc/forwarding_graph.h"
#include "chainc/names.h"

namespace chainc {

// "Function A should come before function B."
struct OrderPreference {
  FunctionName before;
  FunctionName after;
};

// Named evaluation function over forwarding graphs. Lower is better.
class CostModel {
 public:
  using Function = std::function<double(const ForwardingGraph&)>;

  CostModel(std::string name, Function function);

  // cost = number of edges.
  static CostModel EdgeCount();

  // cost = number of edges u -> v for which some preference asks for
  // function(v) before function(u).
  static CostModel AdjacencyPreference(std::vector<OrderPreference> prefs);

  const std::string& name() const { return name_; }

  // Throws `Error(kInvalidCost)` when the function returns a non-finite
  // value.
  double operator()(const ForwardingGraph& graph) const;

 private:
  std::string name_;
  Function function_;
};

}  // namespace chainc

#endif  // CHAINC_COST_MODEL_H_
