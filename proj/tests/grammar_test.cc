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

#include "chainc/grammar.h"

#include <gtest/gtest.h>

#include "chainc/component_model.h"
#include "test_support.h"

namespace chainc {
namespace {

using testing::GoldenCorpus;
using testing::SpecGenerator;

std::vector<TokenKind> Kinds(const std::vector<Token>& tokens) {
  std::vector<TokenKind> out;
  for (const Token& t : tokens) out.push_back(t.kind);
  return out;
}

// Byte offset of a 1-based position in `source`.
size_t Offset(const std::string& source, Position p) {
  size_t offset = 0;
  for (int line = 1; line < p.line; ++line) {
    offset = source.find('\n', offset) + 1;
  }
  return offset + p.column - 1;
}

TEST(LexerTest, KeywordsPunctuationAndIdentifiers) {
  auto tokens = Tokenize("service { best-binding { A , B-2 } ; split . 12 }");
  EXPECT_EQ(Kinds(tokens),
            (std::vector<TokenKind>{
                TokenKind::kService, TokenKind::kLBrace, TokenKind::kBestBinding,
                TokenKind::kLBrace, TokenKind::kIdent, TokenKind::kComma,
                TokenKind::kIdent, TokenKind::kRBrace, TokenKind::kSemicolon,
                TokenKind::kSplit, TokenKind::kDot, TokenKind::kNumber,
                TokenKind::kRBrace, TokenKind::kEof}));
  EXPECT_EQ(tokens[6].text, "B-2");
  EXPECT_EQ(tokens[11].text, "12");
}

TEST(LexerTest, MaximalMunchKeepsKeywordPrefixesAsIdentifiers) {
  auto tokens = Tokenize("splitter passive best-bindings");
  ASSERT_EQ(tokens.size(), 4u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(tokens[i].kind, TokenKind::kIdent);
}

TEST(LexerTest, SkipsCommentsAndTracksLines) {
  auto tokens = Tokenize("# header\nservice {\n  A # trailing\n}");
  ASSERT_EQ(tokens.size(), 5u);
  EXPECT_EQ(tokens[0].span.begin, (Position{2, 1}));
  EXPECT_EQ(tokens[2].text, "A");
  EXPECT_EQ(tokens[2].span.begin, (Position{3, 3}));
  EXPECT_EQ(tokens[2].span.end, (Position{3, 4}));
}

TEST(LexerTest, RejectsLeadingZeroAndForeignCharacters) {
  EXPECT_THROW(Tokenize("A.02"), ParseError);
  try {
    Tokenize("service { A @ }");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), Code::kParse);
    EXPECT_EQ(e.span().begin, (Position{1, 13}));
  }
}

TEST(LexerTest, TokenSpansCoverTheirText) {
  SpecGenerator generator(7);
  for (int i = 0; i < 200; ++i) {
    std::string source = Render(generator.Next());
    for (const Token& token : Tokenize(source)) {
      if (token.kind == TokenKind::kEof) continue;
      size_t begin = Offset(source, token.span.begin);
      size_t end = Offset(source, token.span.end);
      ASSERT_EQ(source.substr(begin, end - begin), token.text) << source;
    }
  }
}

TEST(ParserTest, GoldenCorpusRendersCanonically) {
  for (const auto& golden : GoldenCorpus()) {
    ServiceSpec spec = Parse(golden.source);
    EXPECT_EQ(Render(spec), golden.canonical) << golden.name;
    EXPECT_EQ(Render(Parse(golden.canonical)), golden.canonical);
    EXPECT_FALSE(HasErrors(ValidateSpec(spec))) << golden.name;
  }
}

TEST(ParserTest, BroadbandStructure) {
  ServiceSpec spec = Parse("service { split { BNG ; HTTP-Filter ; pass } , NAT }");
  ASSERT_EQ(spec.compositions.size(), 2u);
  const auto& split = std::get<ast::Split>(spec.compositions[0].node);
  EXPECT_EQ(split.splitter.str(), "BNG");
  EXPECT_TRUE(split.pre.empty());
  ASSERT_EQ(split.branches.size(), 2u);
  const auto& normal = std::get<ast::NormalBranch>(split.branches[0]);
  EXPECT_EQ(normal.body, (std::vector<ast::Composition>{
                             ast::Single{FunctionName("HTTP-Filter")}}));
  EXPECT_EQ(normal.replications, 1);
  EXPECT_TRUE(std::holds_alternative<ast::PassBranch>(split.branches[1]));
  EXPECT_EQ(std::get<ast::Single>(spec.compositions[1].node).function.str(),
            "NAT");
}

TEST(ParserTest, SplitWithBestBindingStageAndReplications) {
  ServiceSpec spec =
      Parse("service { split { CL , best-binding { X , Y } ; A , B . 3 ; pass } }");
  const auto& split = std::get<ast::Split>(spec.compositions[0].node);
  EXPECT_EQ(split.pre,
            (std::vector<FunctionName>{FunctionName("X"), FunctionName("Y")}));
  const auto& normal = std::get<ast::NormalBranch>(split.branches[0]);
  EXPECT_EQ(normal.body.size(), 2u);
  EXPECT_EQ(normal.replications, 3);
  EXPECT_EQ(Render(spec),
            "service { split { CL , best-binding { X , Y } ; A , B.3 ; pass } }");
}

TEST(ParserTest, LinksAndDefinitions) {
  ServiceSpec spec = Parse(
      "service { link(edge) , split { S ; link(edge) } }\n"
      "component edge { FW , NAT }");
  ASSERT_EQ(spec.definitions.size(), 1u);
  EXPECT_EQ(spec.definitions[0].id.str(), "edge");
  EXPECT_EQ(std::get<ast::LinkRef>(spec.compositions[0].node).target.str(),
            "edge");
  EXPECT_EQ(Render(spec),
            "service { link(edge) , split { S ; link(edge) } }\n"
            "component edge { FW , NAT }");
}

TEST(ParserTest, LinkIsContextual) {
  ServiceSpec spec = Parse("service { link , component }");
  EXPECT_EQ(spec.compositions.size(), 2u);
  EXPECT_EQ(std::get<ast::Single>(spec.compositions[0].node).function.str(),
            "link");
}

TEST(ParserTest, DottedLinkTargets) {
  ServiceSpec spec = Parse("service { link(bng-nat.c0) }");
  EXPECT_EQ(std::get<ast::LinkRef>(spec.compositions[0].node).target.str(),
            "bng-nat.c0");
}

struct BadInput {
  const char* source;
  Position at;
};

class ParserErrorTest : public ::testing::TestWithParam<BadInput> {};

TEST_P(ParserErrorTest, ReportsPosition) {
  try {
    Parse(GetParam().source);
    FAIL() << "accepted " << GetParam().source;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), Code::kParse);
    EXPECT_EQ(e.span().begin, GetParam().at) << e.what();
    EXPECT_FALSE(e.expected().empty());
  }
}

INSTANTIATE_TEST_SUITE_P(
    Inputs, ParserErrorTest,
    ::testing::Values(BadInput{"", {1, 1}}, BadInput{"service { }", {1, 11}},
                      BadInput{"service { A", {1, 12}},
                      BadInput{"service { A , }", {1, 15}},
                      BadInput{"service { split { A } }", {1, 21}},
                      BadInput{"service { split { A ; B . 256 } }", {1, 27}},
                      BadInput{"service { best-binding { } }", {1, 26}},
                      BadInput{"service { pass }", {1, 11}},
                      BadInput{"service { A } trailing", {1, 15}},
                      BadInput{"service { A.2 }", {1, 12}}));

TEST(ParserTest, ErrorMessageNamesExpectedTokens) {
  try {
    Parse("service { A B }");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("expected"), std::string::npos);
    EXPECT_TRUE(e.expected().count("','") || e.expected().count(","))
        << e.what();
  }
}

TEST(RenderTest, DumpAstShowsStructure) {
  std::string dump =
      DumpAst(Parse("service { split { BNG ; HTTP-Filter.2 ; pass } , NAT }"));
  EXPECT_NE(dump.find("split BNG"), std::string::npos) << dump;
  EXPECT_NE(dump.find("pass"), std::string::npos);
  EXPECT_NE(dump.find("single NAT"), std::string::npos);
  EXPECT_NE(dump.find("x2"), std::string::npos);
}

TEST(RoundTripProperty, RandomSpecsSurviveRenderAndParse) {
  SpecGenerator generator(2026);
  for (int i = 0; i < 1000; ++i) {
    ServiceSpec spec = generator.Next();
    std::string text = Render(spec);
    ServiceSpec reparsed = Parse(text);
    ASSERT_EQ(reparsed, spec) << text;
    ASSERT_EQ(Render(reparsed), text);
  }
}

}  // namespace
}  // namespace chainc
