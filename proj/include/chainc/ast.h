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

// Abstract syntax of flexible service specifications: a service is a list of
// compositions, and compositions nest through split branches.

#ifndef CHAINC_AST_H_
#define CHAINC_AST_H_

#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "chainc/names.h"

namespace chainc {
namespace ast {

struct Composition;

// Totally ordered chain. The parser never produces this node (a top-level or
// branch comma list is already a list of compositions); it arises when a
// component model carrying `sequence-functions` is inlined.
struct Sequence {
  std::vector<Composition> items;
  friend bool operator==(const Sequence&, const Sequence&) = default;
};

// Functions to be chained in whichever order is most efficient.
struct BestBinding {
  std::vector<FunctionName> functions;
  friend bool operator==(const BestBinding&, const BestBinding&) = default;
};

// Functions among which every permutation must be traversable.
struct AllBindings {
  std::vector<FunctionName> functions;
  friend bool operator==(const AllBindings&, const AllBindings&) = default;
};

struct Single {
  FunctionName function;
  friend bool operator==(const Single&, const Single&) = default;
};

// Reference to a component defined elsewhere: a named definition of the
// same document or a catalog entry.
struct LinkRef {
  ComponentId target;
  friend bool operator==(const LinkRef&, const LinkRef&) = default;
};

struct NormalBranch {
  std::vector<Composition> body;
  int replications = 1;
  friend bool operator==(const NormalBranch&, const NormalBranch&) = default;
};

struct PassBranch {
  friend bool operator==(const PassBranch&, const PassBranch&) = default;
};

using Branch = std::variant<NormalBranch, PassBranch>;

struct Split {
  FunctionName splitter;
  // Optional best-binding stage traversed before the branches; empty when
  // absent.
  std::vector<FunctionName> pre;
  std::vector<Branch> branches;
  friend bool operator==(const Split&, const Split&) = default;
};

struct Composition {
  using Node =
      std::variant<Sequence, BestBinding, AllBindings, Split, Single, LinkRef>;
  Node node;

  Composition() = default;
  template <typename T>
    requires(!std::is_same_v<std::decay_t<T>, Composition> &&
             std::is_constructible_v<Node, T &&>)
  Composition(T&& value) : node(std::forward<T>(value)) {}  // NOLINT

  friend bool operator==(const Composition&, const Composition&) = default;
};

// A named component written next to the service body
// (`component <id> { ... }`), reachable through `link(<id>)`.
struct Definition {
  ComponentId id;
  std::vector<Composition> compositions;
  friend bool operator==(const Definition&, const Definition&) = default;
};

}  // namespace ast

// Metadata only: never changes expansion.
enum class Direction { kForward, kSymmetric };

struct ServiceSpec {
  std::vector<ast::Composition> compositions;
  std::vector<ast::Definition> definitions;
  Direction direction = Direction::kForward;
  friend bool operator==(const ServiceSpec&, const ServiceSpec&) = default;
};

}  // namespace chainc

#endif  // CHAINC_AST_H_
