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

// Expansion of component models into concrete forwarding graphs.
//
// Within a component, the exits of composition i are fully connected to the
// entries of composition i+1. Per composition:
//
//   single        one node
//   sequence      a chain
//   best-binding  a chain in one order (first/enumerate/select), or a
//                 complete digraph plus a best-binding flex group (annotate)
//   all-bindings  always a complete digraph plus an all-bindings flex group
//   split         splitter node, optional best-binding stage, then every
//                 branch copy fed from the stage exits; a pass branch adds
//                 the stage exits to the split's exits (bypass edges)
//   link          the target component expanded in place
//
// Enumeration walks the Cartesian product of the permutations of every
// best-binding occurrence, in lexicographic order with the first occurrence
// most significant. An occurrence is one best-binding per reference path:
// two links to the same component permute independently, while the copies
// of a replicated branch share one choice and stay isomorphic.

#ifndef CHAINC_EXPANSION_H_
#define CHAINC_EXPANSION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chainc/component_model.h"
#include "chainc/cost_model.h"
#include "chainc/diagnostic.h"
#include "chainc/forwarding_graph.h"

namespace chainc {

enum class ExpansionMode { kFirst, kEnumerate, kSelect, kAnnotate };

inline constexpr std::uint64_t kDefaultEnumerationCap = 10000;

struct ExpansionPolicy {
  ExpansionMode mode = ExpansionMode::kFirst;
  // Largest candidate count enumerate/select may visit.
  std::uint64_t cap = kDefaultEnumerationCap;
  // Required for kSelect.
  std::optional<CostModel> cost;
};

struct Expansion {
  // kEnumerate: every candidate in enumeration order. Other modes: one graph.
  std::vector<ForwardingGraph> graphs;
  // Cost of the chosen graph (kSelect only).
  std::optional<double> cost;
  std::vector<Diagnostic> warnings;  // e.g. W_DANGLING_PASS
};

// The model must be valid with all references resolved; otherwise throws
// `Error(kInvalidModel)`. Throws `Error(kCapExceeded)` (message carries the
// exact count) when enumerate/select would exceed `policy.cap`.
Expansion Expand(const ComponentModel& model, const ExpansionPolicy& policy);

// Product of |g|! over every best-binding occurrence (split stages included,
// linked components counted once per reference). Equals the number of graphs
// `Expand` returns in enumerate mode without a cap.
boost::multiprecision::cpp_int CountExpansions(const ComponentModel& model);

struct Selection {
  ForwardingGraph graph;
  double cost = 0;
  size_t index = 0;  // position in `candidates`
};

// Minimal cost; ties go to the earliest candidate. Throws
// `Error(kEmptyCandidates)` for an empty list.
Selection SelectBest(std::span<const ForwardingGraph> candidates,
                     const CostModel& cost);

}  // namespace chainc

#endif  // CHAINC_EXPANSION_H_
