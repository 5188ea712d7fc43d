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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "chainc/grammar.h"
#include "chainc/graph_emit.h"
#include "test_support.h"

namespace chainc {
namespace {

using testing::AllPermutationsArePaths;
using testing::LabelEdges;
using testing::ModelOf;
using testing::OracleCount;
using testing::OracleShape;
using testing::ShapeOf;
using testing::SpecGenerator;
using LabelPairs = std::set<std::pair<std::string, std::string>>;

ForwardingGraph First(const std::string& source) {
  return Expand(ModelOf(source), {}).graphs.at(0);
}

std::vector<ForwardingGraph> Enumerate(const ComponentModel& model,
                                       std::uint64_t cap = kDefaultEnumerationCap) {
  ExpansionPolicy policy;
  policy.mode = ExpansionMode::kEnumerate;
  policy.cap = cap;
  return Expand(model, policy).graphs;
}

std::multiset<std::string> Labels(const ForwardingGraph& graph) {
  std::multiset<std::string> out;
  for (const NodeInstance& node : graph.nodes) out.insert(node.function.str());
  return out;
}

std::set<std::string> Ids(const ForwardingGraph& graph) {
  std::set<std::string> out;
  for (const NodeInstance& node : graph.nodes) out.insert(node.instance_id);
  return out;
}

std::set<std::pair<std::string, std::string>> EdgeIds(const ForwardingGraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (const Edge& e : g.edges) out.emplace(e.from, e.to);
  return out;
}

void ExpectWellFormed(const ForwardingGraph& graph) {
  std::set<std::string> ids = Ids(graph);
  ASSERT_EQ(ids.size(), graph.nodes.size()) << "instance ids must be unique";
  for (const Edge& e : graph.edges) {
    ASSERT_TRUE(ids.count(e.from) && ids.count(e.to));
    ASSERT_NE(e.from, e.to);
  }
  ASSERT_TRUE(std::is_sorted(graph.edges.begin(), graph.edges.end()));
  ASSERT_EQ(std::adjacent_find(graph.edges.begin(), graph.edges.end()),
            graph.edges.end());
  for (const auto& id : graph.entries) ASSERT_TRUE(ids.count(id));
  for (const auto& id : graph.exits) ASSERT_TRUE(ids.count(id));
  for (const FlexGroup& group : graph.flex_groups) {
    ASSERT_FALSE(group.members.empty());
    for (const auto& id : group.members) ASSERT_TRUE(ids.count(id));
  }
  ASSERT_TRUE(ReachabilityCheck(graph).empty());
}

TEST(ExpandTest, SequenceOfTwo) {
  ForwardingGraph g = First("service { BNG, NAT }");
  EXPECT_EQ(g.nodes.size(), 2u);
  EXPECT_EQ(LabelEdges(g), (LabelPairs{{"BNG", "NAT"}}));
  EXPECT_EQ(g.entries, std::vector<std::string>{"c0/k0/BNG"});
  EXPECT_EQ(g.exits, std::vector<std::string>{"c0/k1/NAT"});
}

TEST(ExpandTest, SplitWithPassBypassesToSuccessor) {
  ForwardingGraph g = First("service { split { BNG ; HTTP-Filter ; pass } , NAT }");
  EXPECT_EQ(Labels(g), (std::multiset<std::string>{"BNG", "HTTP-Filter", "NAT"}));
  EXPECT_EQ(LabelEdges(g), (LabelPairs{{"BNG", "HTTP-Filter"},
                                       {"HTTP-Filter", "NAT"},
                                       {"BNG", "NAT"}}));
  EXPECT_EQ(g.edges.size(), 3u);
  EXPECT_EQ(g.find("c0/k0/BNG")->role, NodeRole::kSplitter);
  EXPECT_NE(g.find("c0/k0/b1r1/c1/k0/HTTP-Filter"), nullptr);
}

TEST(ExpandTest, AllBindingsIsACompleteDigraphInEveryMode) {
  const std::string source =
      "service { all-bindings { WOC , EdgeFW , MON , ADC , AppFW } }";
  for (ExpansionMode mode : {ExpansionMode::kFirst, ExpansionMode::kEnumerate,
                             ExpansionMode::kAnnotate}) {
    ExpansionPolicy policy;
    policy.mode = mode;
    Expansion expansion = Expand(ModelOf(source), policy);
    ASSERT_EQ(expansion.graphs.size(), 1u);
    const ForwardingGraph& g = expansion.graphs[0];
    EXPECT_EQ(g.nodes.size(), 5u);
    EXPECT_EQ(g.edges.size(), 20u);
    EXPECT_EQ(g.entries.size(), 5u);
    EXPECT_EQ(g.exits.size(), 5u);
    ASSERT_EQ(g.flex_groups.size(), 1u);
    EXPECT_EQ(g.flex_groups[0].kind, FlexKind::kAllBindings);
    EXPECT_TRUE(AllPermutationsArePaths(g, g.flex_groups[0].members));
  }
}

TEST(ExpandTest, BestBindingEnumeratesBothOrders) {
  auto graphs = Enumerate(ModelOf("service { best-binding { BNG , NAT } }"));
  ASSERT_EQ(graphs.size(), 2u);
  EXPECT_EQ(LabelEdges(graphs[0]), (LabelPairs{{"BNG", "NAT"}}));
  EXPECT_EQ(LabelEdges(graphs[1]), (LabelPairs{{"NAT", "BNG"}}));
  EXPECT_EQ(graphs[1].entries, std::vector<std::string>{"c0/k0/NAT"});
}

TEST(ExpandTest, ReplicatedBranch) {
  ForwardingGraph g = First("service { split { CL ; A.2 } }");
  EXPECT_EQ(Labels(g), (std::multiset<std::string>{"CL", "A", "A"}));
  EXPECT_EQ(EdgeIds(g),
            (std::set<std::pair<std::string, std::string>>{
                {"c0/k0/CL", "c0/k0/b1r1/c1/k0/A"},
                {"c0/k0/CL", "c0/k0/b1r2/c1/k0/A"}}));
}

TEST(ExpandTest, ReplicationWithPassRejoins) {
  ForwardingGraph g = First("service { split { CL ; A.2 ; pass } , Z }");
  const std::string a1 = "c0/k0/b1r1/c1/k0/A", a2 = "c0/k0/b1r2/c1/k0/A";
  const std::string cl = "c0/k0/CL", z = "c0/k1/Z";
  EXPECT_EQ(EdgeIds(g), (std::set<std::pair<std::string, std::string>>{
                            {cl, a1}, {cl, a2}, {a1, z}, {a2, z}, {cl, z}}));
  EXPECT_EQ(g.nodes.size(), 4u);
}

TEST(ExpandTest, MobileExample) {
  ForwardingGraph g = First(
      "service { PGW , FW , split { DPI ; Header-Enr ; LI , Video-Opt ; TCP-Opt } }");
  EXPECT_EQ(g.nodes.size(), 7u);
  EXPECT_EQ(LabelEdges(g), (LabelPairs{{"PGW", "FW"},
                                       {"FW", "DPI"},
                                       {"DPI", "Header-Enr"},
                                       {"DPI", "LI"},
                                       {"LI", "Video-Opt"},
                                       {"DPI", "TCP-Opt"}}));
  std::vector<std::string> exits;
  for (const auto& id : g.exits) exits.push_back(testing::FunctionOf(g, id));
  EXPECT_EQ(exits, (std::vector<std::string>{"Header-Enr", "Video-Opt", "TCP-Opt"}));
}

TEST(ExpandTest, BestBindingStageFeedsBranches) {
  ForwardingGraph g =
      First("service { split { S , best-binding { X , Y } ; A ; B } }");
  EXPECT_EQ(LabelEdges(g), (LabelPairs{{"S", "X"}, {"X", "Y"}, {"Y", "A"}, {"Y", "B"}}));
}

TEST(ExpandTest, DuplicateNamesGetSuffixes) {
  ForwardingGraph g = First("service { split { A , best-binding { A , B } ; C } }");
  EXPECT_NE(g.find("c0/k0/A"), nullptr);
  EXPECT_NE(g.find("c0/k0/A#1"), nullptr);
  EXPECT_EQ(g.find("c0/k0/A")->role, NodeRole::kSplitter);
}

TEST(ExpandTest, LinksExpandInPlaceWithDisjointIds) {
  ComponentModel model = ModelOf(
      "service { link(e) , link(e) }\ncomponent e { best-binding { X , Y } }");
  ForwardingGraph g = Expand(model, {}).graphs[0];
  EXPECT_EQ(g.nodes.size(), 4u);
  EXPECT_NE(g.find("c0/k0/e/k0/X"), nullptr);
  EXPECT_NE(g.find("c0/k1/e/k0/X"), nullptr);
  EXPECT_EQ(CountExpansions(model), 4);
  auto graphs = Enumerate(model);
  EXPECT_EQ(graphs.size(), 4u);
}

TEST(ExpandTest, ReplicasShareOneOrder) {
  ComponentModel model =
      ModelOf("service { split { S ; best-binding { X , Y } , Z . 3 } }");
  EXPECT_EQ(CountExpansions(model), 2);
  for (const ForwardingGraph& g : Enumerate(model)) {
    // Copies 2 and 3 are copy 1 with the copy index substituted.
    auto edges = EdgeIds(g);
    for (std::string copy : {"r2/", "r3/"}) {
      for (const auto& [from, to] : edges) {
        auto rename = [&](std::string id) {
          auto at = id.find("r1/");
          return at == std::string::npos ? id : id.replace(at, 3, copy);
        };
        if (to.find("/b1r1/") == std::string::npos) continue;
        EXPECT_TRUE(edges.count({rename(from), rename(to)}));
      }
    }
    EXPECT_EQ(g.nodes.size(), 10u);
  }
}

TEST(ExpandTest, AnnotateMeshesBestBinding) {
  ExpansionPolicy policy;
  policy.mode = ExpansionMode::kAnnotate;
  ForwardingGraph g =
      Expand(ModelOf("service { A , best-binding { X , Y , W } , B }"), policy)
          .graphs[0];
  ASSERT_EQ(g.flex_groups.size(), 1u);
  EXPECT_EQ(g.flex_groups[0].kind, FlexKind::kBestBinding);
  EXPECT_EQ(g.flex_groups[0].members.size(), 3u);
  // 6 mesh edges, A to each member, each member to B.
  EXPECT_EQ(g.edges.size(), 12u);
}

TEST(ExpandTest, DanglingPassWarning) {
  auto warnings = Expand(ModelOf("service { A , split { S ; B ; pass } }"), {}).warnings;
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_EQ(warnings[0].code, Code::kDanglingPass);
  EXPECT_EQ(warnings[0].path, "service-component[c0].compositions[k1]");
  EXPECT_TRUE(
      Expand(ModelOf("service { split { BNG ; HTTP-Filter ; pass } , NAT }"), {})
          .warnings.empty());
}

TEST(ExpandTest, CapIsCheckedBeforeEnumeration) {
  ComponentModel model = ModelOf("service { best-binding { A , B , C , D } }");
  try {
    Enumerate(model, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Code::kCapExceeded);
    EXPECT_NE(std::string(e.what()).find("24"), std::string::npos);
  }
  EXPECT_EQ(Enumerate(model, 24).size(), 24u);
  ExpansionPolicy select;
  select.mode = ExpansionMode::kSelect;
  select.cap = 23;
  select.cost = CostModel::EdgeCount();
  EXPECT_THROW(Expand(model, select), Error);
}

TEST(ExpandTest, RejectsUnresolvedModels) {
  try {
    Expand(ModelOf("service { A , link(missing) }"), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Code::kInvalidModel);
  }
}

TEST(CountExpansionsTest, Examples) {
  EXPECT_EQ(CountExpansions(ModelOf("service { BNG, NAT }")), 1);
  EXPECT_EQ(CountExpansions(ModelOf("service { best-binding { BNG , NAT } }")), 2);
  EXPECT_EQ(CountExpansions(
                ModelOf("service { best-binding { A , B , C } , best-binding { D , E } }")),
            12);
  EXPECT_EQ(CountExpansions(ModelOf(
                "service { all-bindings { A , B , C } , split { S , best-binding { X , Y , Z } ; A } }")),
            6);
}

TEST(CountExpansionsTest, ExceedsNativeIntegers) {
  std::string functions;
  for (int i = 0; i < 30; ++i) {
    if (i) functions += " , ";
    functions += "F" + std::to_string(i);
  }
  auto count = CountExpansions(ModelOf("service { best-binding { " + functions + " } }"));
  EXPECT_EQ(count.str(), "265252859812191058636308480000000");
}

TEST(SelectTest, AdjacencyPreferencePicksPreferredOrder) {
  ComponentModel model = ModelOf("service { best-binding { NAT , BNG } }");
  CostModel cost = CostModel::AdjacencyPreference({{FunctionName("BNG"), FunctionName("NAT")}});
  auto candidates = Enumerate(model);
  Selection best = SelectBest(candidates, cost);
  EXPECT_EQ(LabelEdges(best.graph), (LabelPairs{{"BNG", "NAT"}}));
  EXPECT_EQ(best.cost, 0);
  EXPECT_EQ(best.index, 1u);

  ExpansionPolicy policy;
  policy.mode = ExpansionMode::kSelect;
  policy.cost = cost;
  Expansion selected = Expand(model, policy);
  ASSERT_EQ(selected.graphs.size(), 1u);
  EXPECT_EQ(selected.graphs[0], best.graph);
  EXPECT_EQ(selected.cost, 0);
}

TEST(SelectTest, SingleCandidateAndTies) {
  auto one = Enumerate(ModelOf("service { A , B }"));
  EXPECT_EQ(SelectBest(one, CostModel::EdgeCount()).graph, one[0]);
  auto many = Enumerate(ModelOf("service { best-binding { A , B , C } }"));
  Selection best = SelectBest(many, CostModel::EdgeCount());
  EXPECT_EQ(best.index, 0u);
  EXPECT_EQ(best.cost, 2);
}

TEST(SelectTest, Errors) {
  try {
    SelectBest({}, CostModel::EdgeCount());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Code::kEmptyCandidates);
  }
  CostModel broken("nan", [](const ForwardingGraph&) {
    return std::numeric_limits<double>::quiet_NaN();
  });
  auto graphs = Enumerate(ModelOf("service { A }"));
  try {
    SelectBest(graphs, broken);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Code::kInvalidCost);
  }
  ExpansionPolicy policy;
  policy.mode = ExpansionMode::kSelect;
  EXPECT_THROW(Expand(ModelOf("service { A }"), policy), Error);
}

TEST(ExpandProperty, PureSequencesArePaths) {
  for (int n = 1; n <= 12; ++n) {
    std::string source = "service { ";
    for (int i = 0; i < n; ++i) source += (i ? " , F" : "F") + std::to_string(i);
    ForwardingGraph g = First(source + " }");
    EXPECT_EQ(g.nodes.size(), static_cast<size_t>(n));
    EXPECT_EQ(g.edges.size(), static_cast<size_t>(n - 1));
    EXPECT_EQ(g.entries.size(), 1u);
    EXPECT_EQ(g.exits.size(), 1u);
  }
}

TEST(ExpandProperty, MeshesContainEveryPermutation) {
  const std::vector<std::string> names = {"A", "B", "C", "D", "E", "F"};
  for (size_t n = 1; n <= names.size(); ++n) {
    std::string source = "service { all-bindings { ";
    for (size_t i = 0; i < n; ++i) source += (i ? " , " : "") + names[i];
    ForwardingGraph g = First(source + " } }");
    EXPECT_EQ(g.edges.size(), n * (n - 1));
    std::vector<std::string> ids;
    for (const auto& node : g.nodes) ids.push_back(node.instance_id);
    EXPECT_TRUE(AllPermutationsArePaths(g, ids));
  }
}

// Random specs with at most 720 candidates.
std::vector<ServiceSpec> SmallCorpus(std::uint32_t seed, size_t size) {
  SpecGenerator generator(seed);
  std::vector<ServiceSpec> out;
  while (out.size() < size) {
    ServiceSpec spec = generator.Next();
    if (OracleCount(spec) <= 720) out.push_back(std::move(spec));
  }
  return out;
}

TEST(ExpandProperty, EnumerationMatchesOracles) {
  for (const ServiceSpec& spec : SmallCorpus(11, 200)) {
    ComponentModel model = Normalize(spec);
    std::string text = Render(spec);
    auto graphs = Enumerate(model);
    ASSERT_EQ(graphs.size(), OracleCount(spec)) << text;
    ASSERT_EQ(CountExpansions(model), OracleCount(spec)) << text;
    std::set<std::set<std::pair<std::string, std::string>>> distinct;
    for (const ForwardingGraph& g : graphs) {
      ExpectWellFormed(g);
      ASSERT_EQ(ShapeOf(g), OracleShape(spec, false)) << text;
      distinct.insert(EdgeIds(g));
    }
    ASSERT_EQ(distinct.size(), graphs.size()) << text;
    ASSERT_EQ(graphs.front(), Expand(model, {}).graphs[0]);

    ExpansionPolicy annotate;
    annotate.mode = ExpansionMode::kAnnotate;
    ForwardingGraph mesh = Expand(model, annotate).graphs[0];
    ExpectWellFormed(mesh);
    ASSERT_EQ(ShapeOf(mesh), OracleShape(spec, true)) << text;
  }
}

TEST(ExpandProperty, ExpansionIsDeterministic) {
  for (const ServiceSpec& spec : SmallCorpus(12, 50)) {
    ComponentModel model = Normalize(spec);
    ASSERT_EQ(Enumerate(model), Enumerate(Normalize(spec)));
  }
}

TEST(SelectProperty, MinimalAgainstExhaustiveComparison) {
  std::mt19937 rng(3);
  const std::vector<std::string> pool = {"A", "B", "C", "D", "FW", "NAT"};
  for (const ServiceSpec& spec : SmallCorpus(13, 200)) {
    ComponentModel model = Normalize(spec);
    auto graphs = Enumerate(model);
    std::vector<OrderPreference> prefs;
    for (int i = 0; i < 3; ++i) {
      prefs.push_back({FunctionName(pool[rng() % pool.size()]),
                       FunctionName(pool[rng() % pool.size()])});
    }
    for (const CostModel& cost :
         {CostModel::EdgeCount(), CostModel::AdjacencyPreference(prefs)}) {
      Selection best = SelectBest(graphs, cost);
      size_t expected = 0;
      for (size_t i = 0; i < graphs.size(); ++i) {
        if (cost(graphs[i]) < cost(graphs[expected])) expected = i;
      }
      ASSERT_EQ(best.index, expected);
      ASSERT_EQ(best.cost, cost(graphs[expected]));
      ExpansionPolicy policy;
      policy.mode = ExpansionMode::kSelect;
      policy.cost = cost;
      Expansion first = Expand(model, policy);
      Expansion second = Expand(model, policy);
      ASSERT_EQ(first.graphs, second.graphs);
      ASSERT_EQ(first.graphs[0], graphs[expected]);

      CostModel scaled("scaled", [cost](const ForwardingGraph& g) {
        return 3.5 * cost(g);
      });
      ASSERT_EQ(SelectBest(graphs, scaled).index, expected);
    }
  }
}

}  // namespace
}  // namespace chainc
