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

// The flattened, reference-linked service model: components hold ordered
// composition lists, and nesting is replaced by component references.
// `Normalize` hoists a `ServiceSpec` into this form and `Inline` folds it
// back.

#ifndef CHAINC_COMPONENT_MODEL_H_
#define CHAINC_COMPONENT_MODEL_H_

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "chainc/ast.h"
#include "chainc/diagnostic.h"
#include "chainc/names.h"

namespace chainc {
namespace flat {

// Explicit multi-function chain held by a single composition entry.
struct Sequence {
  std::vector<FunctionName> functions;
  friend bool operator==(const Sequence&, const Sequence&) = default;
};

struct BestBinding {
  std::vector<FunctionName> functions;
  friend bool operator==(const BestBinding&, const BestBinding&) = default;
};

struct AllBindings {
  std::vector<FunctionName> functions;
  friend bool operator==(const AllBindings&, const AllBindings&) = default;
};

struct NormalBranch {
  ComponentId component;
  int replications = 1;
  friend bool operator==(const NormalBranch&, const NormalBranch&) = default;
};

struct PassBranch {
  friend bool operator==(const PassBranch&, const PassBranch&) = default;
};

struct Branch {
  int id = 0;  // uint8 list key
  std::variant<NormalBranch, PassBranch> kind;
  friend bool operator==(const Branch&, const Branch&) = default;
};

struct Split {
  FunctionName splitter;
  std::vector<FunctionName> pre;
  std::vector<Branch> branches;
  friend bool operator==(const Split&, const Split&) = default;
};

struct Single {
  FunctionName function;
  friend bool operator==(const Single&, const Single&) = default;
};

struct LinkRef {
  ComponentId target;
  friend bool operator==(const LinkRef&, const LinkRef&) = default;
};

using Body =
    std::variant<Sequence, BestBinding, AllBindings, Split, Single, LinkRef>;

struct Composition {
  CompositionId id;
  Body body;
  friend bool operator==(const Composition&, const Composition&) = default;
};

struct Component {
  ComponentId id;
  std::vector<Composition> compositions;
  friend bool operator==(const Component&, const Component&) = default;
};

}  // namespace flat

struct ComponentModel {
  ComponentId starting_component;
  std::vector<flat::Component> components;

  const flat::Component* find(const ComponentId& id) const;

  friend bool operator==(const ComponentModel&, const ComponentModel&) =
      default;
};

// Every component id referenced by `component` (branch targets and link
// targets), in document order, duplicates kept.
std::vector<ComponentId> ReferencesOf(const flat::Component& component);

// Checks the AST invariants: names, non-empty lists, duplicate-free binding
// sets, branch counts and replication ranges, definition ids and the
// acyclicity of links between definitions. Links whose target is not a local
// definition are external references and are not errors here.
std::vector<Diagnostic> ValidateSpec(const ServiceSpec& spec);

// Hoists nested compositions into components. The root is `c0`, hoisted
// branch components are `c1, c2, ...` in pre-order (skipping ids taken by
// named definitions), composition ids are `k0, k1, ...` per component and
// branch ids start at 1. A branch whose body is a single `link(x)` refers to
// `x` directly. Throws `Error(kInvalidSpec)` when `ValidateSpec` reports
// errors.
ComponentModel Normalize(const ServiceSpec& spec);

// Reference integrity: E_BAD_START for a dangling starting component,
// E_UNRESOLVED_REF per dangling reference, E_CYCLIC_REF per strongly
// connected component that has more than one member or a self-loop.
std::vector<Diagnostic> CheckReferences(const ComponentModel& model);

// Everything a well-formed model must satisfy except reference resolution:
// identifier syntax and uniqueness, non-empty lists, binding-set duplicates
// and branch id/replication ranges.
std::vector<Diagnostic> ValidateModelStructure(const ComponentModel& model);

// `ValidateModelStructure` plus `CheckReferences`. With `allow_external`,
// dangling references are accepted as links to catalog entries.
std::vector<Diagnostic> ValidateModel(const ComponentModel& model,
                                      bool allow_external = false);

// Targets of references that name no component of `model`, sorted and
// deduplicated.
std::vector<ComponentId> ExternalReferences(const ComponentModel& model);

// Folds a model back into a spec. Components that are link targets, are
// referenced more than once, or are unreachable from the start become named
// definitions; every other component is written inline at its single use.
// References to components absent from the model are kept as `link(x)`.
// Throws `Error(kUnresolvedRef)` for a dangling starting component and
// `Error(kCyclicRef)` for cyclic models.
ServiceSpec Inline(const ComponentModel& model);

}  // namespace chainc

#endif  // CHAINC_COMPONENT_MODEL_H_
