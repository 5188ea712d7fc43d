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

#include "chainc/catalog.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <system_error>

#include "chainc/expansion.h"
#include "chainc/yang_io.h"
#include "overloaded.h"

namespace chainc {
namespace {

namespace fs = std::filesystem;
using internal::Overloaded;

constexpr char kIndexFile[] = "index.txt";

void WriteAtomically(const fs::path& path, const std::string& content) {
  fs::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) throw Error(Code::kIo, "cannot write " + temp.string());
  }
  std::error_code ec;
  fs::rename(temp, path, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw Error(Code::kIo, "cannot rename " + temp.string() + " to " +
                               path.string());
  }
}

std::optional<std::string> ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buffer.str();
}

ComponentId Rename(const ComponentId& id, const std::string& entry) {
  return ComponentId(entry + "." + id.str());
}

// Applies `map` to every reference held by `component`.
template <typename Map>
void RewriteReferences(flat::Component& component, const Map& map) {
  for (flat::Composition& composition : component.compositions) {
    std::visit(Overloaded{
                   [&](flat::LinkRef& link) { link.target = map(link.target); },
                   [&](flat::Split& split) {
                     for (flat::Branch& branch : split.branches) {
                       if (auto* normal =
                               std::get_if<flat::NormalBranch>(&branch.kind)) {
                         normal->component = map(normal->component);
                       }
                     }
                   },
                   [](auto&) {},
               },
               composition.body);
  }
}

class Resolver {
 public:
  explicit Resolver(const CatalogStore& store) : store_(store) {}

  ComponentModel Run(const ComponentModel& model) {
    for (const ComponentId& ref : ExternalReferences(model)) Import(ref.str());
    ComponentModel result = model;
    for (flat::Component& component : result.components) {
      RewriteReferences(component, [&](const ComponentId& ref) {
        auto it = starts_.find(ref.str());
        return it != starts_.end() && !model.find(ref) ? it->second : ref;
      });
    }
    for (flat::Component& component : imported_) {
      result.components.push_back(std::move(component));
    }
    std::vector<Diagnostic> diagnostics = ValidateModel(result);
    if (HasErrors(diagnostics)) {
      throw Error(Code::kInvalidModel, "resolved model is invalid", "",
                  std::move(diagnostics));
    }
    return result;
  }

 private:
  ComponentId Import(const std::string& entry) {
    if (auto it = starts_.find(entry); it != starts_.end()) return it->second;
    if (std::find(stack_.begin(), stack_.end(), entry) != stack_.end()) {
      std::string chain;
      for (const std::string& name : stack_) chain += name + " -> ";
      throw Error(Code::kCyclicRef,
                  "catalog entries link in a cycle: " + chain + entry, entry);
    }
    if (!store_.Contains(entry)) {
      throw Error(Code::kNotFound,
                  "reference '" + entry + "' names no component or entry",
                  entry);
    }
    stack_.push_back(entry);
    ComponentModel model = store_.Get(entry);
    for (const ComponentId& ref : ExternalReferences(model)) Import(ref.str());
    for (flat::Component component : model.components) {
      component.id = Rename(component.id, entry);
      RewriteReferences(component, [&](const ComponentId& ref) {
        return model.find(ref) ? Rename(ref, entry) : starts_.at(ref.str());
      });
      imported_.push_back(std::move(component));
    }
    stack_.pop_back();
    ComponentId start = Rename(model.starting_component, entry);
    starts_.emplace(entry, start);
    return start;
  }

  const CatalogStore& store_;
  std::vector<std::string> stack_;
  std::map<std::string, ComponentId> starts_;
  std::vector<flat::Component> imported_;
};

}  // namespace

CatalogStore::CatalogStore(std::filesystem::path root)
    : root_(std::move(root)) {}

std::vector<std::pair<std::string, std::string>> CatalogStore::ReadIndex()
    const {
  std::vector<std::pair<std::string, std::string>> entries;
  fs::path index = root_ / kIndexFile;
  std::error_code ec;
  if (!fs::exists(index, ec)) return entries;
  std::optional<std::string> text = ReadFile(index);
  if (!text) throw Error(Code::kIo, "cannot read " + index.string());
  std::istringstream lines(*text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(Code::kIo, "malformed index line '" + line + "'",
                  index.string());
    }
    entries.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return entries;
}

std::vector<std::string> CatalogStore::Names() const {
  std::vector<std::string> names;
  for (auto& [name, file] : ReadIndex()) names.push_back(name);
  return names;
}

bool CatalogStore::Contains(const std::string& name) const {
  std::vector<std::string> names = Names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

void CatalogStore::Add(const std::string& name,
                       const ComponentModel& model) const {
  if (!IsValidEntryName(name)) {
    throw Error(Code::kBadName, "invalid catalog entry name '" + name + "'");
  }
  std::vector<std::pair<std::string, std::string>> index = ReadIndex();
  for (const auto& entry : index) {
    if (entry.first == name) {
      throw Error(Code::kDuplicateName,
                  "catalog entry '" + name + "' already exists", name);
    }
  }
  std::vector<Diagnostic> diagnostics = ValidateModel(model, true);
  for (const ComponentId& ref : ExternalReferences(model)) {
    if (ref.str() == name || !Contains(ref.str())) {
      diagnostics.push_back(MakeError(
          Code::kUnresolvedRef,
          "reference '" + ref.str() + "' names no component or entry"));
    }
  }
  if (HasErrors(diagnostics)) {
    throw Error(Code::kInvalidModel, "cannot add invalid model '" + name + "'",
                name, std::move(diagnostics));
  }

  std::error_code ec;
  fs::create_directories(root_, ec);
  if (ec) throw Error(Code::kIo, "cannot create " + root_.string());
  std::string file = name + ".json";
  WriteAtomically(root_ / file, ToInstance(model, DocumentFormat::kJson).body);
  index.emplace_back(name, file);
  std::string text;
  for (const auto& [entry, entry_file] : index) {
    text += entry + "\t" + entry_file + "\n";
  }
  WriteAtomically(root_ / kIndexFile, text);
}

ComponentModel CatalogStore::Get(const std::string& name) const {
  for (const auto& [entry, file] : ReadIndex()) {
    if (entry != name) continue;
    std::optional<std::string> body = ReadFile(root_ / file);
    if (!body) {
      throw Error(Code::kMalformed, "cannot read entry file " + file, name);
    }
    try {
      return FromInstance({DocumentFormat::kJson, *body}).model;
    } catch (const Error& error) {
      throw Error(Code::kMalformed, "entry '" + name + "' is not a valid "
                  "instance document", name, error.diagnostics());
    }
  }
  throw Error(Code::kNotFound, "no catalog entry '" + name + "'", name);
}

std::vector<CatalogRow> ListCatalog(const CatalogStore& store) {
  std::vector<std::string> names = store.Names();
  std::sort(names.begin(), names.end());
  std::vector<CatalogRow> rows;
  for (const std::string& name : names) {
    CatalogRow row{name, std::nullopt, std::nullopt};
    try {
      ComponentModel model = ResolveLinks(store.Get(name), store);
      Expansion expansion = Expand(model, {});
      row.stats = ComputeGraphStats(expansion.graphs.front());
    } catch (const Error& error) {
      row.error = MakeError(error.code(), error.what(), name);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComponentModel ResolveLinks(const ComponentModel& model,
                            const CatalogStore& store) {
  return Resolver(store).Run(model);
}

}  // namespace chainc
