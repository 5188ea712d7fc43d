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

#ifndef CHAINC_NAMES_H_
#define CHAINC_NAMES_H_

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace chainc {

// String identifier distinguished at the type level by `Tag`. Construction
// does not validate; validity is reported as diagnostics by the checkers so
// that every problem in a document surfaces at once.
template <typename Tag>
class Identifier {
 public:
  Identifier() = default;
  explicit Identifier(std::string value) : value_(std::move(value)) {}

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  friend auto operator<=>(const Identifier&, const Identifier&) = default;
  friend bool operator==(const Identifier&, const Identifier&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Identifier& id) {
    return os << id.value_;
  }

 private:
  std::string value_;
};

// Name of a service function (VNF or endpoint; the model does not
// distinguish them).
using FunctionName = Identifier<struct FunctionNameTag>;
// Key of a service component; also the target of component references.
using ComponentId = Identifier<struct ComponentIdTag>;
// Key of a composition inside one component.
using CompositionId = Identifier<struct CompositionIdTag>;

// `[A-Za-z_][A-Za-z0-9_-]*`
bool IsIdentifierSegment(std::string_view text);

// One of `service`, `best-binding`, `all-bindings`, `split`, `pass`.
bool IsReservedKeyword(std::string_view text);

// An identifier segment that is not a reserved keyword.
bool IsValidFunctionName(std::string_view text);

// One or more identifier segments joined by `.`; no segment may be `pass`.
// The dotted form names components imported from a catalog entry
// (`<entry>.<component>`).
bool IsValidComponentId(std::string_view text);

// Catalog entry names are single-segment component ids.
bool IsValidEntryName(std::string_view text);

}  // namespace chainc

#endif  // CHAINC_NAMES_H_
