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

#include "chainc/component_model.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "overloaded.h"

namespace chainc {
namespace {

constexpr int kMaxBranches = 255;
constexpr int kMaxReplications = 255;
constexpr int kMaxBranchId = 255;

using internal::Overloaded;

std::string Indexed(const std::string& base, std::string_view field,
                    size_t index) {
  std::string out = base;
  if (!out.empty()) out += '.';
  out += field;
  out += '[';
  out += std::to_string(index);
  out += ']';
  return out;
}

void CheckFunctionName(const FunctionName& name, const std::string& path,
                       std::vector<Diagnostic>& out) {
  if (!IsValidFunctionName(name.str())) {
    out.push_back(MakeError(Code::kBadName,
                            "invalid function name '" + name.str() + "'",
                            path));
  }
}

// Non-empty, well-named, duplicate-free set of functions.
void CheckFunctionSet(const std::vector<FunctionName>& functions,
                      std::string_view what, const std::string& path,
                      std::vector<Diagnostic>& out) {
  if (functions.empty()) {
    out.push_back(MakeError(Code::kEmptyFunctions,
                            std::string(what) + " needs at least one function",
                            path));
    return;
  }
  std::set<FunctionName> seen;
  for (size_t i = 0; i < functions.size(); ++i) {
    std::string item_path = Indexed(path, "functions", i);
    CheckFunctionName(functions[i], item_path, out);
    if (!seen.insert(functions[i]).second) {
      out.push_back(MakeError(Code::kDupFunction,
                              "function '" + functions[i].str() +
                                  "' appears twice in one " + std::string(what),
                              item_path));
    }
  }
}

void CheckComponentIdSyntax(const ComponentId& id, const std::string& path,
                            std::vector<Diagnostic>& out) {
  if (!IsValidComponentId(id.str())) {
    out.push_back(MakeError(Code::kBadName,
                            "invalid component id '" + id.str() + "'", path));
  }
}

// Visits every link target inside `compositions`, including those nested in
// branch bodies.
void CollectLinks(const std::vector<ast::Composition>& compositions,
                  std::vector<ComponentId>& out) {
  for (const ast::Composition& composition : compositions) {
    std::visit(
        Overloaded{
            [&](const ast::Sequence& s) { CollectLinks(s.items, out); },
            [&](const ast::Split& s) {
              for (const ast::Branch& branch : s.branches) {
                if (const auto* normal = std::get_if<ast::NormalBranch>(&branch)) {
                  CollectLinks(normal->body, out);
                }
              }
            },
            [&](const ast::LinkRef& l) { out.push_back(l.target); },
            [](const auto&) {},
        },
        composition.node);
  }
}

class SpecValidator {
 public:
  std::vector<Diagnostic> Run(const ServiceSpec& spec) {
    if (spec.compositions.empty()) {
      out_.push_back(MakeError(Code::kEmptyService,
                               "service needs at least one composition",
                               "compositions"));
    }
    CheckList(spec.compositions, "", "compositions");
    CheckDefinitions(spec.definitions);
    return std::move(out_);
  }

 private:
  void CheckList(const std::vector<ast::Composition>& list,
                 const std::string& base, std::string_view field) {
    for (size_t i = 0; i < list.size(); ++i) {
      Check(list[i], Indexed(base, field, i));
    }
  }

  void Check(const ast::Composition& composition, const std::string& path) {
    std::visit(
        Overloaded{
            [&](const ast::Sequence& s) {
              if (s.items.empty()) {
                out_.push_back(MakeError(Code::kEmptySequence,
                                         "empty sequence", path));
              }
              CheckList(s.items, path, "items");
            },
            [&](const ast::BestBinding& b) {
              CheckFunctionSet(b.functions, "best-binding", path, out_);
            },
            [&](const ast::AllBindings& a) {
              CheckFunctionSet(a.functions, "all-bindings", path, out_);
            },
            [&](const ast::Single& s) {
              CheckFunctionName(s.function, path, out_);
            },
            [&](const ast::LinkRef& l) {
              CheckComponentIdSyntax(l.target, path, out_);
            },
            [&](const ast::Split& s) { CheckSplit(s, path); },
        },
        composition.node);
  }

  void CheckSplit(const ast::Split& split, const std::string& path) {
    CheckFunctionName(split.splitter, path + ".splitter", out_);
    if (!split.pre.empty()) {
      CheckFunctionSet(split.pre, "best-binding", path + ".pre", out_);
    }
    if (split.branches.empty()) {
      out_.push_back(
          MakeError(Code::kEmptySplit, "split needs at least one branch", path));
      return;
    }
    if (split.branches.size() > kMaxBranches) {
      out_.push_back(MakeError(
          Code::kRange,
          "split has " + std::to_string(split.branches.size()) +
              " branches; at most " + std::to_string(kMaxBranches) +
              " are addressable",
          path));
    }
    bool all_pass = true;
    for (size_t i = 0; i < split.branches.size(); ++i) {
      std::string branch_path = Indexed(path, "branches", i);
      const auto* normal = std::get_if<ast::NormalBranch>(&split.branches[i]);
      if (normal == nullptr) continue;
      all_pass = false;
      if (normal->body.empty()) {
        out_.push_back(
            MakeError(Code::kEmptyBranch, "empty branch body", branch_path));
      }
      if (normal->replications < 1 || normal->replications > kMaxReplications) {
        out_.push_back(MakeError(
            Code::kRange,
            "replications must be in 1..255, got " +
                std::to_string(normal->replications),
            branch_path));
      }
      CheckList(normal->body, branch_path, "body");
    }
    if (all_pass) {
      out_.push_back(MakeWarning(Code::kAllPassSplit,
                                 "every branch of the split is pass", path));
    }
  }

  void CheckDefinitions(const std::vector<ast::Definition>& definitions) {
    std::map<ComponentId, size_t> index;
    for (size_t i = 0; i < definitions.size(); ++i) {
      const ast::Definition& def = definitions[i];
      std::string path = Indexed("", "definitions", i);
      CheckComponentIdSyntax(def.id, path, out_);
      if (!index.emplace(def.id, i).second) {
        out_.push_back(MakeError(Code::kDupId,
                                 "component '" + def.id.str() +
                                     "' is defined twice",
                                 path));
      }
      if (def.compositions.empty()) {
        out_.push_back(MakeError(Code::kEmptyComponent,
                                 "component needs at least one composition",
                                 path));
      }
      CheckList(def.compositions, path, "compositions");
    }

    // Links between definitions must form a DAG.
    std::vector<std::vector<size_t>> edges(definitions.size());
    for (size_t i = 0; i < definitions.size(); ++i) {
      std::vector<ComponentId> links;
      CollectLinks(definitions[i].compositions, links);
      for (const ComponentId& target : links) {
        auto it = index.find(target);
        if (it != index.end()) edges[i].push_back(it->second);
      }
    }
    enum class Mark { kNone, kActive, kDone };
    std::vector<Mark> marks(definitions.size(), Mark::kNone);
    std::function<bool(size_t)> visit = [&](size_t node) {
      marks[node] = Mark::kActive;
      for (size_t next : edges[node]) {
        if (marks[next] == Mark::kActive) {
          out_.push_back(MakeError(Code::kCyclicRef,
                                   "component '" + definitions[next].id.str() +
                                       "' links to itself through '" +
                                       definitions[node].id.str() + "'",
                                   Indexed("", "definitions", node)));
          return false;
        }
        if (marks[next] == Mark::kNone && !visit(next)) return false;
      }
      marks[node] = Mark::kDone;
      return true;
    };
    for (size_t i = 0; i < definitions.size(); ++i) {
      if (marks[i] == Mark::kNone && !visit(i)) break;
    }
  }

  std::vector<Diagnostic> out_;
};

class Normalizer {
 public:
  explicit Normalizer(const ServiceSpec& spec) : spec_(spec) {
    for (const ast::Definition& def : spec.definitions) {
      taken_.insert(def.id.str());
    }
  }

  ComponentModel Run() {
    ComponentModel model;
    model.starting_component = Hoist(spec_.compositions);
    for (const ast::Definition& def : spec_.definitions) {
      Emit(def.id, def.compositions);
    }
    model.components = std::move(components_);
    return model;
  }

 private:
  ComponentId Fresh() {
    while (true) {
      std::string candidate = "c" + std::to_string(next_++);
      if (taken_.insert(candidate).second) return ComponentId(candidate);
    }
  }

  ComponentId Hoist(const std::vector<ast::Composition>& items) {
    ComponentId id = Fresh();
    Emit(id, items);
    return id;
  }

  // The component slot is reserved before its body is flattened so that ids
  // and list positions follow pre-order.
  void Emit(const ComponentId& id, const std::vector<ast::Composition>& items) {
    size_t slot = components_.size();
    components_.push_back({id, {}});
    std::vector<flat::Body> bodies;
    Flatten(items, bodies);
    std::vector<flat::Composition> compositions;
    compositions.reserve(bodies.size());
    for (size_t i = 0; i < bodies.size(); ++i) {
      compositions.push_back(
          {CompositionId("k" + std::to_string(i)), std::move(bodies[i])});
    }
    components_[slot].compositions = std::move(compositions);
  }

  void Flatten(const std::vector<ast::Composition>& items,
               std::vector<flat::Body>& out) {
    for (const ast::Composition& item : items) {
      std::visit(
          Overloaded{
              [&](const ast::Sequence& s) { Flatten(s.items, out); },
              [&](const ast::BestBinding& b) {
                out.push_back(flat::BestBinding{b.functions});
              },
              [&](const ast::AllBindings& a) {
                out.push_back(flat::AllBindings{a.functions});
              },
              [&](const ast::Single& s) {
                out.push_back(flat::Single{s.function});
              },
              [&](const ast::LinkRef& l) {
                out.push_back(flat::LinkRef{l.target});
              },
              [&](const ast::Split& s) { out.push_back(FlattenSplit(s)); },
          },
          item.node);
    }
  }

  flat::Split FlattenSplit(const ast::Split& split) {
    flat::Split result{split.splitter, split.pre, {}};
    int branch_id = 1;
    for (const ast::Branch& branch : split.branches) {
      flat::Branch flat_branch{branch_id++, flat::PassBranch{}};
      if (const auto* normal = std::get_if<ast::NormalBranch>(&branch)) {
        ComponentId target;
        const ast::LinkRef* link =
            normal->body.size() == 1
                ? std::get_if<ast::LinkRef>(&normal->body.front().node)
                : nullptr;
        target = link != nullptr ? link->target : Hoist(normal->body);
        flat_branch.kind = flat::NormalBranch{target, normal->replications};
      }
      result.branches.push_back(std::move(flat_branch));
    }
    return result;
  }

  const ServiceSpec& spec_;
  std::set<std::string> taken_;
  int next_ = 0;
  std::vector<flat::Component> components_;
};

std::string ComponentPath(const ComponentId& id) {
  return "service-component[" + id.str() + "]";
}

std::string CompositionPath(const ComponentId& component,
                            const CompositionId& composition) {
  return ComponentPath(component) + ".compositions[" + composition.str() + "]";
}

// Strongly connected components of the local reference graph (Tarjan).
// Returns only the cyclic ones: more than one member, or a self-loop. Members
// are listed in model order.
std::vector<std::vector<size_t>> CyclicComponents(const ComponentModel& model) {
  const size_t n = model.components.size();
  std::map<ComponentId, size_t> index;
  for (size_t i = 0; i < n; ++i) index.emplace(model.components[i].id, i);
  std::vector<std::vector<size_t>> edges(n);
  std::vector<bool> self_loop(n, false);
  for (size_t i = 0; i < n; ++i) {
    for (const ComponentId& ref : ReferencesOf(model.components[i])) {
      auto it = index.find(ref);
      if (it == index.end()) continue;
      edges[i].push_back(it->second);
      if (it->second == i) self_loop[i] = true;
    }
  }

  std::vector<int> order(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<size_t> stack;
  std::vector<std::vector<size_t>> result;
  int counter = 0;
  std::function<void(size_t)> connect = [&](size_t v) {
    order[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (size_t w : edges[v]) {
      if (order[w] < 0) {
        connect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], order[w]);
      }
    }
    if (low[v] == order[v]) {
      std::vector<size_t> members;
      size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        members.push_back(w);
      } while (w != v);
      if (members.size() > 1 || self_loop[v]) {
        std::sort(members.begin(), members.end());
        result.push_back(std::move(members));
      }
    }
  };
  for (size_t v = 0; v < n; ++v) {
    if (order[v] < 0) connect(v);
  }
  std::sort(result.begin(), result.end());
  return result;
}

void CheckBody(const flat::Body& body, const std::string& path,
               std::vector<Diagnostic>& out) {
  std::visit(
      Overloaded{
          [&](const flat::Sequence& s) {
            if (s.functions.size() < 2) {
              out.push_back(MakeError(
                  Code::kShortSequence,
                  "sequence-functions needs at least two functions", path));
            }
            for (size_t i = 0; i < s.functions.size(); ++i) {
              CheckFunctionName(s.functions[i], Indexed(path, "functions", i),
                                out);
            }
          },
          [&](const flat::BestBinding& b) {
            CheckFunctionSet(b.functions, "best-binding", path, out);
          },
          [&](const flat::AllBindings& a) {
            CheckFunctionSet(a.functions, "all-bindings", path, out);
          },
          [&](const flat::Single& s) {
            CheckFunctionName(s.function, path, out);
          },
          [&](const flat::LinkRef& l) {
            CheckComponentIdSyntax(l.target, path, out);
          },
          [&](const flat::Split& s) {
            CheckFunctionName(s.splitter, path + ".splitter-function", out);
            if (!s.pre.empty()) {
              CheckFunctionSet(s.pre, "best-binding",
                               path + ".optional-best-binding", out);
            }
            if (s.branches.empty()) {
              out.push_back(MakeError(Code::kEmptySplit,
                                      "split needs at least one branch", path));
              return;
            }
            std::set<int> ids;
            bool all_pass = true;
            for (const flat::Branch& branch : s.branches) {
              std::string branch_path =
                  path + ".outgoing-branches[" + std::to_string(branch.id) + "]";
              if (branch.id < 0 || branch.id > kMaxBranchId) {
                out.push_back(MakeError(Code::kRange,
                                        "branch-id must be in 0..255",
                                        branch_path));
              }
              if (!ids.insert(branch.id).second) {
                out.push_back(MakeError(Code::kDupId, "duplicate branch-id",
                                        branch_path));
              }
              const auto* normal = std::get_if<flat::NormalBranch>(&branch.kind);
              if (normal == nullptr) continue;
              all_pass = false;
              CheckComponentIdSyntax(normal->component, branch_path, out);
              if (normal->replications < 1 ||
                  normal->replications > kMaxReplications) {
                out.push_back(MakeError(Code::kRange,
                                        "replications must be in 1..255",
                                        branch_path));
              }
            }
            if (all_pass) {
              out.push_back(MakeWarning(Code::kAllPassSplit,
                                        "every branch of the split is pass",
                                        path));
            }
          },
      },
      body);
}

struct Ast {
  const ComponentModel& model;
  std::set<ComponentId> named;

  std::vector<ast::Composition> Component(const flat::Component& component) {
    std::vector<ast::Composition> out;
    for (const flat::Composition& composition : component.compositions) {
      out.push_back(Body(composition.body));
    }
    return out;
  }

  ast::Composition Body(const flat::Body& body) {
    return std::visit(
        Overloaded{
            [](const flat::Sequence& s) -> ast::Composition {
              ast::Sequence seq;
              for (const FunctionName& f : s.functions) {
                seq.items.push_back(ast::Single{f});
              }
              return seq;
            },
            [](const flat::BestBinding& b) -> ast::Composition {
              return ast::BestBinding{b.functions};
            },
            [](const flat::AllBindings& a) -> ast::Composition {
              return ast::AllBindings{a.functions};
            },
            [](const flat::Single& s) -> ast::Composition {
              return ast::Single{s.function};
            },
            [](const flat::LinkRef& l) -> ast::Composition {
              return ast::LinkRef{l.target};
            },
            [&](const flat::Split& s) -> ast::Composition {
              ast::Split split{s.splitter, s.pre, {}};
              for (const flat::Branch& branch : s.branches) {
                const auto* normal =
                    std::get_if<flat::NormalBranch>(&branch.kind);
                if (normal == nullptr) {
                  split.branches.push_back(ast::PassBranch{});
                  continue;
                }
                ast::NormalBranch out{{}, normal->replications};
                const flat::Component* target = model.find(normal->component);
                if (target == nullptr || named.contains(normal->component)) {
                  out.body.push_back(ast::LinkRef{normal->component});
                } else {
                  out.body = Component(*target);
                }
                split.branches.push_back(std::move(out));
              }
              return split;
            },
        },
        body);
  }
};

}  // namespace

const flat::Component* ComponentModel::find(const ComponentId& id) const {
  for (const flat::Component& component : components) {
    if (component.id == id) return &component;
  }
  return nullptr;
}

std::vector<ComponentId> ReferencesOf(const flat::Component& component) {
  std::vector<ComponentId> out;
  for (const flat::Composition& composition : component.compositions) {
    if (const auto* link = std::get_if<flat::LinkRef>(&composition.body)) {
      out.push_back(link->target);
    } else if (const auto* split = std::get_if<flat::Split>(&composition.body)) {
      for (const flat::Branch& branch : split->branches) {
        if (const auto* normal = std::get_if<flat::NormalBranch>(&branch.kind)) {
          out.push_back(normal->component);
        }
      }
    }
  }
  return out;
}

std::vector<Diagnostic> ValidateSpec(const ServiceSpec& spec) {
  return SpecValidator().Run(spec);
}

ComponentModel Normalize(const ServiceSpec& spec) {
  std::vector<Diagnostic> diagnostics = ValidateSpec(spec);
  if (HasErrors(diagnostics)) {
    throw Error(Code::kInvalidSpec, "specification has errors", {},
                std::move(diagnostics));
  }
  return Normalizer(spec).Run();
}

std::vector<Diagnostic> CheckReferences(const ComponentModel& model) {
  std::vector<Diagnostic> out;
  if (model.find(model.starting_component) == nullptr) {
    out.push_back(MakeError(Code::kBadStart,
                            "starting component '" +
                                model.starting_component.str() +
                                "' does not exist",
                            "starting-component"));
  }
  for (const flat::Component& component : model.components) {
    for (const flat::Composition& composition : component.compositions) {
      std::string path = CompositionPath(component.id, composition.id);
      auto report = [&](const ComponentId& target, const std::string& where) {
        if (model.find(target) == nullptr) {
          out.push_back(MakeError(Code::kUnresolvedRef,
                                  "reference to unknown component '" +
                                      target.str() + "'",
                                  where));
        }
      };
      if (const auto* link = std::get_if<flat::LinkRef>(&composition.body)) {
        report(link->target, path);
      } else if (const auto* split =
                     std::get_if<flat::Split>(&composition.body)) {
        for (const flat::Branch& branch : split->branches) {
          if (const auto* normal =
                  std::get_if<flat::NormalBranch>(&branch.kind)) {
            report(normal->component,
                   path + ".outgoing-branches[" + std::to_string(branch.id) +
                       "]");
          }
        }
      }
    }
  }
  for (const std::vector<size_t>& cycle : CyclicComponents(model)) {
    std::string members;
    for (size_t i : cycle) {
      if (!members.empty()) members += ", ";
      members += model.components[i].id.str();
    }
    out.push_back(MakeError(Code::kCyclicRef,
                            "cyclic component references: " + members,
                            ComponentPath(model.components[cycle.front()].id)));
  }
  return out;
}

std::vector<Diagnostic> ValidateModelStructure(const ComponentModel& model) {
  std::vector<Diagnostic> out;
  CheckComponentIdSyntax(model.starting_component, "starting-component", out);
  std::set<ComponentId> component_ids;
  for (const flat::Component& component : model.components) {
    std::string path = ComponentPath(component.id);
    CheckComponentIdSyntax(component.id, path, out);
    if (!component_ids.insert(component.id).second) {
      out.push_back(MakeError(Code::kDupId,
                              "duplicate component-identifier '" +
                                  component.id.str() + "'",
                              path));
    }
    if (component.compositions.empty()) {
      out.push_back(MakeError(Code::kEmptyComponent,
                              "component needs at least one composition",
                              path));
    }
    std::set<CompositionId> composition_ids;
    for (const flat::Composition& composition : component.compositions) {
      std::string composition_path =
          CompositionPath(component.id, composition.id);
      if (!IsIdentifierSegment(composition.id.str()) ||
          composition.id.str() == "pass") {
        out.push_back(MakeError(Code::kBadName,
                                "invalid composition-identifier '" +
                                    composition.id.str() + "'",
                                composition_path));
      }
      if (!composition_ids.insert(composition.id).second) {
        out.push_back(MakeError(Code::kDupId,
                                "duplicate composition-identifier '" +
                                    composition.id.str() + "'",
                                composition_path));
      }
      CheckBody(composition.body, composition_path, out);
    }
  }
  return out;
}

std::vector<Diagnostic> ValidateModel(const ComponentModel& model,
                                      bool allow_external) {
  std::vector<Diagnostic> out = ValidateModelStructure(model);
  for (Diagnostic& d : CheckReferences(model)) {
    if (allow_external && d.code == Code::kUnresolvedRef) continue;
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<ComponentId> ExternalReferences(const ComponentModel& model) {
  std::set<ComponentId> out;
  for (const flat::Component& component : model.components) {
    for (const ComponentId& ref : ReferencesOf(component)) {
      if (model.find(ref) == nullptr) out.insert(ref);
    }
  }
  return {out.begin(), out.end()};
}

ServiceSpec Inline(const ComponentModel& model) {
  const flat::Component* start = model.find(model.starting_component);
  if (start == nullptr) {
    throw Error(Code::kUnresolvedRef,
                "starting component '" + model.starting_component.str() +
                    "' does not exist",
                "starting-component");
  }
  std::vector<Diagnostic> cycles;
  for (Diagnostic& d : CheckReferences(model)) {
    if (d.code == Code::kCyclicRef) cycles.push_back(std::move(d));
  }
  if (!cycles.empty()) {
    throw Error(Code::kCyclicRef, "component references are cyclic", {},
                std::move(cycles));
  }

  std::map<ComponentId, int> ref_count;
  std::set<ComponentId> link_targets;
  std::set<ComponentId> single_link_branch_targets;
  for (const flat::Component& component : model.components) {
    for (const flat::Composition& composition : component.compositions) {
      if (const auto* link = std::get_if<flat::LinkRef>(&composition.body)) {
        ++ref_count[link->target];
        link_targets.insert(link->target);
      } else if (const auto* split =
                     std::get_if<flat::Split>(&composition.body)) {
        for (const flat::Branch& branch : split->branches) {
          const auto* normal = std::get_if<flat::NormalBranch>(&branch.kind);
          if (normal == nullptr) continue;
          ++ref_count[normal->component];
          const flat::Component* target = model.find(normal->component);
          // Such a body would be written `link(x)` and re-normalize to a
          // direct reference, losing the component.
          if (target != nullptr && target->compositions.size() == 1 &&
              std::holds_alternative<flat::LinkRef>(
                  target->compositions.front().body)) {
            single_link_branch_targets.insert(normal->component);
          }
        }
      }
    }
  }

  std::set<ComponentId> reachable;
  std::function<void(const flat::Component&)> reach =
      [&](const flat::Component& component) {
        if (!reachable.insert(component.id).second) return;
        for (const ComponentId& ref : ReferencesOf(component)) {
          if (const flat::Component* next = model.find(ref)) reach(*next);
        }
      };
  reach(*start);

  Ast builder{model, {}};
  for (const flat::Component& component : model.components) {
    const ComponentId& id = component.id;
    if (id == start->id) {
      if (ref_count[id] > 0) builder.named.insert(id);
      continue;
    }
    if (link_targets.contains(id) || ref_count[id] > 1 ||
        !reachable.contains(id) || single_link_branch_targets.contains(id)) {
      builder.named.insert(id);
    }
  }

  ServiceSpec spec;
  if (builder.named.contains(start->id)) {
    spec.compositions.push_back(ast::LinkRef{start->id});
  } else {
    spec.compositions = builder.Component(*start);
  }
  for (const flat::Component& component : model.components) {
    if (builder.named.contains(component.id)) {
      spec.definitions.push_back({component.id, builder.Component(component)});
    }
  }
  return spec;
}

}  // namespace chainc
