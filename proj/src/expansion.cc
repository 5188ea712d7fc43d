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

#include "chainc/expansion.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "overloaded.h"

namespace chainc {
namespace {

using boost::multiprecision::cpp_int;
using internal::Overloaded;

struct Ends {
  std::vector<std::string> entries;
  std::vector<std::string> exits;
};

void AppendUnique(std::vector<std::string>& out,
                  const std::vector<std::string>& items) {
  for (const std::string& item : items) {
    if (std::find(out.begin(), out.end(), item) == out.end()) {
      out.push_back(item);
    }
  }
}

cpp_int Factorial(size_t n) {
  cpp_int result = 1;
  for (size_t i = 2; i <= n; ++i) result *= i;
  return result;
}

std::string CompositionPath(const ComponentId& component,
                            const CompositionId& composition) {
  return "service-component[" + component.str() + "].compositions[" +
         composition.str() + "]";
}

// One expansion pass. Best-binding occurrences are numbered in visiting
// order; `choices[g]` is the order used for occurrence g (identity when
// absent).
class Builder {
 public:
  Builder(const ComponentModel& model, bool annotate,
          const std::vector<std::vector<size_t>>* choices)
      : model_(model), annotate_(annotate), choices_(choices) {}

  ForwardingGraph Build() {
    const ComponentId& start = model_.starting_component;
    Ends ends = ExpandComponent(start, start.str(), /*at_tail=*/true);
    graph_.entries = std::move(ends.entries);
    graph_.exits = std::move(ends.exits);
    graph_.edges.assign(edges_.begin(), edges_.end());
    return std::move(graph_);
  }

  const std::vector<size_t>& group_sizes() const { return group_sizes_; }
  const std::vector<Diagnostic>& warnings() const { return warnings_; }

 private:
  Ends ExpandComponent(const ComponentId& id, const std::string& path,
                       bool at_tail) {
    const flat::Component* component = model_.find(id);
    Ends result;
    std::vector<std::string> previous;
    const size_t n = component->compositions.size();
    for (size_t i = 0; i < n; ++i) {
      const flat::Composition& composition = component->compositions[i];
      Ends ends = ExpandComposition(*component, composition,
                                    path + "/" + composition.id.str(),
                                    at_tail && i + 1 == n);
      if (i == 0) {
        result.entries = ends.entries;
      } else {
        Connect(previous, ends.entries);
      }
      previous = std::move(ends.exits);
    }
    result.exits = std::move(previous);
    return result;
  }

  Ends ExpandComposition(const flat::Component& component,
                         const flat::Composition& composition,
                         const std::string& prefix, bool at_tail) {
    return std::visit(
        Overloaded{
            [&](const flat::Single& single) {
              std::string node = AddNode(prefix, single.function);
              return Ends{{node}, {node}};
            },
            [&](const flat::Sequence& sequence) {
              return Chain(AddNodes(prefix, sequence.functions));
            },
            [&](const flat::BestBinding& binding) {
              return BestBindingStage(prefix, binding.functions);
            },
            [&](const flat::AllBindings& bindings) {
              return Mesh(prefix, bindings.functions, FlexKind::kAllBindings);
            },
            [&](const flat::Split& split) {
              Ends ends = SplitStage(prefix, split, at_tail);
              bool has_pass = std::any_of(
                  split.branches.begin(), split.branches.end(),
                  [](const flat::Branch& branch) {
                    return std::holds_alternative<flat::PassBranch>(
                        branch.kind);
                  });
              if (at_tail && has_pass) {
                Diagnostic warning = MakeWarning(
                    Code::kDanglingPass,
                    "pass branch of the final split has no successor",
                    CompositionPath(component.id, composition.id));
                if (std::find(warnings_.begin(), warnings_.end(), warning) ==
                    warnings_.end()) {
                  warnings_.push_back(std::move(warning));
                }
              }
              return ends;
            },
            [&](const flat::LinkRef& link) {
              return ExpandComponent(link.target,
                                     prefix + "/" + link.target.str(),
                                     at_tail);
            },
        },
        composition.body);
  }

  Ends SplitStage(const std::string& prefix, const flat::Split& split,
                  bool at_tail) {
    std::string splitter = AddNode(prefix, split.splitter, NodeRole::kSplitter);
    Ends result{{splitter}, {}};
    std::vector<std::string> fan_out = {splitter};
    if (!split.pre.empty()) {
      Ends pre = BestBindingStage(prefix, split.pre);
      Connect(fan_out, pre.entries);
      fan_out = std::move(pre.exits);
    }
    bool pass = false;
    for (const flat::Branch& branch : split.branches) {
      if (std::holds_alternative<flat::PassBranch>(branch.kind)) {
        pass = true;
        continue;
      }
      const auto& normal = std::get<flat::NormalBranch>(branch.kind);
      const size_t first_group = next_group_;
      for (int copy = 1; copy <= normal.replications; ++copy) {
        next_group_ = first_group;
        std::string path = prefix + "/b" + std::to_string(branch.id) + "r" +
                           std::to_string(copy) + "/" +
                           normal.component.str();
        Ends ends = ExpandComponent(normal.component, path, at_tail);
        Connect(fan_out, ends.entries);
        AppendUnique(result.exits, ends.exits);
      }
    }
    if (pass) AppendUnique(result.exits, fan_out);
    return result;
  }

  Ends BestBindingStage(const std::string& prefix,
                        const std::vector<FunctionName>& functions) {
    if (annotate_) return Mesh(prefix, functions, FlexKind::kBestBinding);
    std::vector<std::string> nodes = AddNodes(prefix, functions);
    const size_t group = next_group_++;
    if (group == group_sizes_.size()) group_sizes_.push_back(nodes.size());
    if (choices_ == nullptr) return Chain(nodes);
    std::vector<std::string> ordered;
    for (size_t index : (*choices_)[group]) ordered.push_back(nodes[index]);
    return Chain(ordered);
  }

  Ends Chain(const std::vector<std::string>& nodes) {
    for (size_t i = 1; i < nodes.size(); ++i) {
      edges_.insert({nodes[i - 1], nodes[i]});
    }
    return Ends{{nodes.front()}, {nodes.back()}};
  }

  Ends Mesh(const std::string& prefix,
            const std::vector<FunctionName>& functions, FlexKind kind) {
    std::vector<std::string> nodes = AddNodes(prefix, functions);
    for (const std::string& from : nodes) {
      for (const std::string& to : nodes) {
        if (from != to) edges_.insert({from, to});
      }
    }
    graph_.flex_groups.push_back({kind, nodes});
    return Ends{nodes, nodes};
  }

  std::vector<std::string> AddNodes(const std::string& prefix,
                                    const std::vector<FunctionName>& functions) {
    std::vector<std::string> nodes;
    for (const FunctionName& function : functions) {
      nodes.push_back(AddNode(prefix, function));
    }
    return nodes;
  }

  std::string AddNode(const std::string& prefix, const FunctionName& function,
                      NodeRole role = NodeRole::kPlain) {
    std::string base = prefix + "/" + function.str();
    std::string id = base;
    for (int dup = 1; ids_.count(id); ++dup) {
      id = base + "#" + std::to_string(dup);
    }
    ids_.insert(id);
    graph_.nodes.push_back({id, function, role});
    return id;
  }

  void Connect(const std::vector<std::string>& from,
               const std::vector<std::string>& to) {
    for (const std::string& u : from) {
      for (const std::string& v : to) edges_.insert({u, v});
    }
  }

  const ComponentModel& model_;
  const bool annotate_;
  const std::vector<std::vector<size_t>>* choices_;
  size_t next_group_ = 0;
  std::vector<size_t> group_sizes_;
  std::vector<Diagnostic> warnings_;
  std::set<std::string> ids_;
  std::set<Edge> edges_;
  ForwardingGraph graph_;
};

// Odometer over per-group permutations, last group fastest.
bool Advance(std::vector<std::vector<size_t>>& choices) {
  for (size_t g = choices.size(); g-- > 0;) {
    if (std::next_permutation(choices[g].begin(), choices[g].end())) {
      return true;
    }
  }
  return false;
}

void RequireExpandable(const ComponentModel& model) {
  std::vector<Diagnostic> diagnostics = ValidateModel(model);
  if (HasErrors(diagnostics)) {
    throw Error(Code::kInvalidModel, "model cannot be expanded", "",
                std::move(diagnostics));
  }
}

class Counter {
 public:
  explicit Counter(const ComponentModel& model) : model_(model) {}

  cpp_int Count(const ComponentId& id) {
    if (auto it = memo_.find(id); it != memo_.end()) return it->second;
    cpp_int total = 1;
    for (const flat::Composition& composition :
         model_.find(id)->compositions) {
      total *= std::visit(
          Overloaded{
              [](const flat::BestBinding& binding) {
                return Factorial(binding.functions.size());
              },
              [&](const flat::Split& split) {
                cpp_int product = Factorial(split.pre.size());
                for (const flat::Branch& branch : split.branches) {
                  if (auto* normal =
                          std::get_if<flat::NormalBranch>(&branch.kind)) {
                    product *= Count(normal->component);
                  }
                }
                return product;
              },
              [&](const flat::LinkRef& link) { return Count(link.target); },
              [](const auto&) { return cpp_int(1); },
          },
          composition.body);
    }
    memo_.emplace(id, total);
    return total;
  }

 private:
  const ComponentModel& model_;
  std::map<ComponentId, cpp_int> memo_;
};

}  // namespace

Expansion Expand(const ComponentModel& model, const ExpansionPolicy& policy) {
  RequireExpandable(model);
  if (policy.mode == ExpansionMode::kSelect && !policy.cost) {
    throw Error(Code::kInvalidCost, "select mode requires a cost model");
  }

  Expansion result;
  const bool annotate = policy.mode == ExpansionMode::kAnnotate;
  Builder first(model, annotate, nullptr);
  ForwardingGraph graph = first.Build();
  result.warnings = first.warnings();
  if (policy.mode == ExpansionMode::kFirst || annotate) {
    result.graphs.push_back(std::move(graph));
    return result;
  }

  std::vector<std::vector<size_t>> choices;
  cpp_int count = 1;
  for (size_t size : first.group_sizes()) {
    std::vector<size_t> identity(size);
    std::iota(identity.begin(), identity.end(), size_t{0});
    choices.push_back(std::move(identity));
    count *= Factorial(size);
  }
  if (count > policy.cap) {
    throw Error(Code::kCapExceeded,
                count.str() + " candidate graphs exceed the cap of " +
                    std::to_string(policy.cap));
  }

  if (policy.mode == ExpansionMode::kEnumerate) {
    do {
      result.graphs.push_back(Builder(model, false, &choices).Build());
    } while (Advance(choices));
    return result;
  }

  std::optional<ForwardingGraph> best;
  double best_cost = 0;
  do {
    ForwardingGraph candidate = Builder(model, false, &choices).Build();
    double cost = (*policy.cost)(candidate);
    if (!best || cost < best_cost) {
      best = std::move(candidate);
      best_cost = cost;
    }
  } while (Advance(choices));
  result.graphs.push_back(std::move(*best));
  result.cost = best_cost;
  return result;
}

cpp_int CountExpansions(const ComponentModel& model) {
  RequireExpandable(model);
  return Counter(model).Count(model.starting_component);
}

Selection SelectBest(std::span<const ForwardingGraph> candidates,
                     const CostModel& cost) {
  if (candidates.empty()) {
    throw Error(Code::kEmptyCandidates, "no candidate graphs to select from");
  }
  Selection best{candidates[0], cost(candidates[0]), 0};
  for (size_t i = 1; i < candidates.size(); ++i) {
    double value = cost(candidates[i]);
    if (value < best.cost) {
      best.cost = value;
      best.index = i;
    }
  }
  best.graph = candidates[best.index];
  return best;
}

}  // namespace chainc
