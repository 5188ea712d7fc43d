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

// A directory of named, pre-composed service models.
//
//   <root>/index.txt      one `name<TAB>filename` line per entry
//   <root>/<name>.json    the entry as a JSON instance document
//
// Both files are written to a temporary sibling and renamed into place.

#ifndef CHAINC_CATALOG_H_
#define CHAINC_CATALOG_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "chainc/component_model.h"
#include "chainc/diagnostic.h"
#include "chainc/graph_emit.h"

namespace chainc {

class CatalogStore {
 public:
  explicit CatalogStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }

  // Creates the directory if needed. The model must validate; references
  // naming other components must resolve locally or name an existing entry.
  // Throws E_BAD_NAME, E_DUPLICATE_NAME, E_INVALID_MODEL or E_IO.
  void Add(const std::string& name, const ComponentModel& model) const;

  // Throws E_NOT_FOUND or E_MALFORMED (unreadable or invalid document).
  ComponentModel Get(const std::string& name) const;

  // Entry names in index order. A missing index is an empty store.
  std::vector<std::string> Names() const;

  bool Contains(const std::string& name) const;

 private:
  std::vector<std::pair<std::string, std::string>> ReadIndex() const;

  std::filesystem::path root_;
};

struct CatalogRow {
  std::string name;
  // Stats of the first-mode expansion of the entry after link resolution.
  std::optional<GraphStats> stats;
  // Set instead of `stats` when the entry cannot be loaded or expanded.
  std::optional<Diagnostic> error;
};

// Sorted by name. Throws E_IO when the index cannot be read.
std::vector<CatalogRow> ListCatalog(const CatalogStore& store);

// Imports every catalog entry named by an unresolved reference, recursively.
// Components of entry `e` are renamed `e.<id>` and references to `e` are
// redirected to `e.<starting component>`. Throws E_NOT_FOUND for a reference
// that names no entry and E_CYCLIC_REF when entries link back to themselves.
ComponentModel ResolveLinks(const ComponentModel& model,
                            const CatalogStore& store);

}  // namespace chainc

#endif  // CHAINC_CATALOG_H_
