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

// Instance documents of the `flexible-service-specification` YANG module in
// JSON and XML encodings.
//
// JSON:
//   {
//     "flexible-service-specification:specification": {
//       "starting-component": "c0",
//       "service-component": [
//         {
//           "component-identifier": "c0",
//           "compositions": [
//             { "composition-identifier": "k0", "single-function": "BNG" }
//           ]
//         }
//       ]
//     }
//   }
//
// Each composition carries exactly one payload: `sequence-functions`,
// `best-binding-functions`, `all-bindings-functions`, the split group
// (`splitter-function`, optional `optional-best-binding`,
// `outgoing-branches`), `single-function`, or `composition` (a link). A
// branch is `{branch-id, composition[, replications]}` or
// `{branch-id, string: "pass"}`.
//
// XML uses the same node names, one element per list entry, rooted at
// `<specification xmlns="urn:chainc:flexible-service-specification">`.

#ifndef CHAINC_YANG_IO_H_
#define CHAINC_YANG_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "chainc/component_model.h"
#include "chainc/diagnostic.h"

namespace chainc {

inline constexpr std::string_view kYangModule =
    "flexible-service-specification";
inline constexpr std::string_view kYangNamespace =
    "urn:chainc:flexible-service-specification";

enum class DocumentFormat { kJson, kXml };

struct InstanceDocument {
  DocumentFormat format = DocumentFormat::kJson;
  std::string body;
};

// Deterministic: list order is preserved, 2-space indentation, trailing
// newline. References to components outside the model are allowed (catalog
// links). Throws `Error(kInvalidModel)` for structurally invalid models.
InstanceDocument ToInstance(const ComponentModel& model, DocumentFormat format);

struct ReadOptions {
  // Ignore unknown keys/elements (reported as W_UNKNOWN_KEY) instead of
  // rejecting them.
  bool lax = false;
};

struct DecodedModel {
  ComponentModel model;
  std::vector<Diagnostic> warnings;
};

// Throws `Error` with E_MALFORMED (syntax), E_SCHEMA (shape, types, payload
// choice, unknown keys in strict mode), E_RANGE (branch-id outside 0..255,
// replications outside 1..255) or the failing model-validation code.
// Dangling references are kept: they may name catalog entries.
DecodedModel FromInstance(const InstanceDocument& document,
                          const ReadOptions& options = {});

}  // namespace chainc

#endif  // CHAINC_YANG_IO_H_
