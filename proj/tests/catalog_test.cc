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

#include <gtest/gtest.h>

#include "chainc/expansion.h"
#include "chainc/yang_io.h"
#include "test_support.h"

namespace chainc {
namespace {

namespace fs = std::filesystem;
using testing::ModelOf;
using testing::ReadFileOrDie;
using testing::TempDir;
using testing::WriteFile;

Code ErrorCode(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Code::kUsage;
}

// Writes entries directly, bypassing the checks of `Add`.
void WriteStore(const fs::path& root,
                const std::vector<std::pair<std::string, std::string>>& entries) {
  std::string index;
  for (const auto& [name, source] : entries) {
    WriteFile(root / (name + ".json"),
              ToInstance(ModelOf(source), DocumentFormat::kJson).body);
    index += name + "\t" + name + ".json\n";
  }
  WriteFile(root / "index.txt", index);
}

TEST(CatalogTest, AddWritesDocumentAndIndex) {
  TempDir dir;
  CatalogStore store(dir.path() / "store");
  store.Add("bng-nat", ModelOf("service { BNG, NAT }"));
  EXPECT_TRUE(fs::exists(dir.path() / "store" / "bng-nat.json"));
  EXPECT_EQ(ReadFileOrDie(dir.path() / "store" / "index.txt"),
            "bng-nat\tbng-nat.json\n");
  EXPECT_EQ(store.Names(), std::vector<std::string>{"bng-nat"});
  EXPECT_FALSE(fs::exists(dir.path() / "store" / "index.txt.tmp"));
}

TEST(CatalogTest, AddRejectsDuplicatesBadNamesAndInvalidModels) {
  TempDir dir;
  CatalogStore store(dir.path());
  store.Add("bng-nat", ModelOf("service { BNG, NAT }"));
  EXPECT_EQ(ErrorCode([&] { store.Add("bng-nat", ModelOf("service { A }")); }),
            Code::kDuplicateName);
  EXPECT_EQ(ErrorCode([&] { store.Add("a.b", ModelOf("service { A }")); }),
            Code::kBadName);
  EXPECT_EQ(ErrorCode([&] { store.Add("x", ModelOf("service { link(nowhere) }")); }),
            Code::kInvalidModel);
  EXPECT_EQ(ErrorCode([&] { store.Add("self", ModelOf("service { link(self) }")); }),
            Code::kInvalidModel);
  ComponentModel invalid{ComponentId("c0"), {}};
  EXPECT_EQ(ErrorCode([&] { store.Add("y", invalid); }), Code::kInvalidModel);
  EXPECT_EQ(store.Names().size(), 1u);
}

TEST(CatalogTest, AddAcceptsLinksToExistingEntries) {
  TempDir dir;
  CatalogStore store(dir.path());
  store.Add("bng-nat", ModelOf("service { BNG, NAT }"));
  store.Add("edge", ModelOf("service { FW , link(bng-nat) }"));
  EXPECT_EQ(store.Names().size(), 2u);
}

TEST(CatalogTest, GetAfterAddIsIdentity) {
  TempDir dir;
  CatalogStore store(dir.path());
  testing::SpecGenerator generator(8);
  for (int i = 0; i < 15; ++i) {
    ComponentModel model = Normalize(generator.Next());
    std::string name = "entry" + std::to_string(i);
    store.Add(name, model);
    ASSERT_EQ(store.Get(name), model);
  }
}

TEST(CatalogTest, GetErrors) {
  TempDir dir;
  CatalogStore store(dir.path());
  EXPECT_EQ(ErrorCode([&] { store.Get("missing"); }), Code::kNotFound);
  store.Add("t", ModelOf("service { A }"));
  WriteFile(dir.path() / "t.json", "{ not json");
  EXPECT_EQ(ErrorCode([&] { store.Get("t"); }), Code::kMalformed);
  fs::remove(dir.path() / "t.json");
  EXPECT_EQ(ErrorCode([&] { store.Get("t"); }), Code::kMalformed);
}

TEST(CatalogTest, ListIsSortedWithStatsOrErrors) {
  TempDir dir;
  CatalogStore store(dir.path());
  EXPECT_TRUE(ListCatalog(store).empty());
  store.Add("zeta", ModelOf("service { BNG, NAT }"));
  store.Add("alpha", ModelOf("service { all-bindings { A , B , C } }"));
  auto rows = ListCatalog(store);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].name, "alpha");
  EXPECT_EQ(rows[1].name, "zeta");
  ASSERT_TRUE(rows[0].stats.has_value());
  EXPECT_EQ(rows[0].stats->edge_count, 6u);
  EXPECT_EQ(rows[1].stats->node_count, 2u);

  WriteFile(dir.path() / "zeta.json", "garbage");
  rows = ListCatalog(store);
  EXPECT_FALSE(rows[1].stats.has_value());
  ASSERT_TRUE(rows[1].error.has_value());
  EXPECT_EQ(rows[1].error->code, Code::kMalformed);
}

TEST(ResolveLinksTest, ImportsEntriesUnderPrefix) {
  TempDir dir;
  CatalogStore store(dir.path());
  store.Add("bng-nat", ModelOf("service { split { BNG ; HTTP-Filter ; pass } , NAT }"));
  ComponentModel model = ModelOf("service { CPE , link(bng-nat) , SRV }");
  ComponentModel resolved = ResolveLinks(model, store);
  EXPECT_TRUE(CheckReferences(resolved).empty());
  EXPECT_NE(resolved.find(ComponentId("bng-nat.c0")), nullptr);
  EXPECT_NE(resolved.find(ComponentId("bng-nat.c1")), nullptr);
  const auto& link =
      std::get<flat::LinkRef>(resolved.components[0].compositions[1].body);
  EXPECT_EQ(link.target.str(), "bng-nat.c0");
  ForwardingGraph g = Expand(resolved, {}).graphs[0];
  EXPECT_EQ(g.nodes.size(), 5u);
  EXPECT_EQ(testing::LabelEdges(g),
            (std::set<std::pair<std::string, std::string>>{
                {"CPE", "BNG"},
                {"BNG", "HTTP-Filter"},
                {"BNG", "NAT"},
                {"HTTP-Filter", "NAT"},
                {"NAT", "SRV"}}));
}

TEST(ResolveLinksTest, RecursiveImportsShareEntries) {
  TempDir dir;
  CatalogStore store(dir.path());
  store.Add("base", ModelOf("service { FW }"));
  store.Add("mid", ModelOf("service { link(base) , NAT }"));
  ComponentModel resolved =
      ResolveLinks(ModelOf("service { link(mid) , link(base) }"), store);
  EXPECT_TRUE(CheckReferences(resolved).empty());
  EXPECT_EQ(resolved.components.size(), 3u);
  EXPECT_NE(resolved.find(ComponentId("base.c0")), nullptr);
  EXPECT_NE(resolved.find(ComponentId("mid.c0")), nullptr);
}

TEST(ResolveLinksTest, ModelsWithoutExternalRefsAreUnchanged) {
  TempDir dir;
  ComponentModel model = ModelOf("service { A , B }");
  EXPECT_EQ(ResolveLinks(model, CatalogStore(dir.path())), model);
}

TEST(ResolveLinksTest, UnresolvableLink) {
  TempDir dir;
  CatalogStore store(dir.path());
  EXPECT_EQ(ErrorCode([&] { ResolveLinks(ModelOf("service { link(nope) }"), store); }),
            Code::kNotFound);
}

TEST(ResolveLinksTest, CrossEntryCycles) {
  TempDir dir;
  WriteStore(dir.path(), {{"a", "service { link(b) }"},
                          {"b", "service { X , link(c) }"},
                          {"c", "service { split { S ; link(a) } }"}});
  CatalogStore store(dir.path());
  EXPECT_EQ(ErrorCode([&] { ResolveLinks(ModelOf("service { link(a) }"), store); }),
            Code::kCyclicRef);
  auto rows = ListCatalog(store);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    ASSERT_TRUE(row.error.has_value());
    EXPECT_EQ(row.error->code, Code::kCyclicRef);
  }
}

TEST(ResolveLinksProperty, RandomStoresResolveToValidModels) {
  testing::SpecGenerator generator(31);
  std::mt19937 rng(4);
  for (int round = 0; round < 10; ++round) {
    TempDir dir;
    CatalogStore store(dir.path());
    std::vector<std::string> names;
    for (int i = 0; i < 5; ++i) {
      ServiceSpec spec = generator.Next();
      // Link some existing entries.
      for (const std::string& name : names) {
        if (rng() % 3 == 0) spec.compositions.push_back(ast::LinkRef{ComponentId(name)});
      }
      std::string name = "e" + std::to_string(i);
      store.Add(name, Normalize(spec));
      names.push_back(name);
    }
    ServiceSpec top = generator.Next();
    for (const std::string& name : names) {
      top.compositions.push_back(ast::LinkRef{ComponentId(name)});
    }
    ComponentModel resolved = ResolveLinks(Normalize(top), store);
    ASSERT_FALSE(HasErrors(ValidateModel(resolved)));
    ASSERT_TRUE(ExternalReferences(resolved).empty());
  }
}

}  // namespace
}  // namespace chainc
