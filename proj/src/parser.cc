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

#include <algorithm>
#include <string>
#include <utility>

#include "chainc/grammar.h"

namespace chainc {
namespace {

constexpr std::string_view kLinkWord = "link";
constexpr std::string_view kComponentWord = "component";
constexpr int kMaxReplications = 255;

const std::set<std::string>& CompositionStarts() {
  static const std::set<std::string> kStarts = {
      "'best-binding'", "'all-bindings'", "'split'", "'link'",
      "function name"};
  return kStarts;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ServiceSpec Run() {
    ServiceSpec spec;
    Expect(TokenKind::kService);
    Expect(TokenKind::kLBrace);
    spec.compositions = CompositionList();
    Expect(TokenKind::kRBrace, {"','", "'}'"});
    while (Peek().kind == TokenKind::kIdent && Peek().text == kComponentWord) {
      Advance();
      ast::Definition def;
      def.id = ComponentIdRule();
      Expect(TokenKind::kLBrace);
      def.compositions = CompositionList();
      Expect(TokenKind::kRBrace, {"','", "'}'"});
      spec.definitions.push_back(std::move(def));
    }
    Expect(TokenKind::kEof, {"'component'", "end of input"});
    return spec;
  }

 private:
  const Token& Peek(size_t ahead = 0) const {
    size_t i = std::min(index_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }

  const Token& Advance() {
    const Token& token = tokens_[index_];
    if (index_ + 1 < tokens_.size()) ++index_;
    return token;
  }

  [[noreturn]] void Fail(std::set<std::string> expected) const {
    const Token& token = Peek();
    std::string found = token.kind == TokenKind::kEof
                            ? std::string("end of input")
                            : "'" + token.text + "'";
    std::string list;
    for (const std::string& e : expected) {
      if (!list.empty()) list += ", ";
      list += e;
    }
    throw ParseError(std::to_string(token.span.begin.line) + ":" +
                         std::to_string(token.span.begin.column) +
                         ": unexpected " + found + "; expected " + list,
                     token.span, std::move(expected));
  }

  const Token& Expect(TokenKind kind, std::set<std::string> expected = {}) {
    if (Peek().kind != kind) {
      if (expected.empty()) expected.insert(std::string(TokenKindName(kind)));
      Fail(std::move(expected));
    }
    return Advance();
  }

  FunctionName Function() {
    if (Peek().kind != TokenKind::kIdent) Fail({"function name"});
    return FunctionName(Advance().text);
  }

  std::vector<FunctionName> Functions() {
    std::vector<FunctionName> out;
    out.push_back(Function());
    while (Peek().kind == TokenKind::kComma) {
      Advance();
      out.push_back(Function());
    }
    return out;
  }

  // Component ids may reuse keywords (except `pass`) and contain dots.
  bool IsIdSegment(const Token& token) const {
    switch (token.kind) {
      case TokenKind::kIdent:
      case TokenKind::kService:
      case TokenKind::kBestBinding:
      case TokenKind::kAllBindings:
      case TokenKind::kSplit:
        return true;
      default:
        return false;
    }
  }

  ComponentId ComponentIdRule() {
    if (!IsIdSegment(Peek())) Fail({"component id"});
    std::string id = Advance().text;
    while (Peek().kind == TokenKind::kDot && IsIdSegment(Peek(1))) {
      Advance();
      id += '.';
      id += Advance().text;
    }
    return ComponentId(std::move(id));
  }

  std::vector<ast::Composition> CompositionList() {
    std::vector<ast::Composition> out;
    out.push_back(CompositionRule());
    while (Peek().kind == TokenKind::kComma) {
      Advance();
      out.push_back(CompositionRule());
    }
    return out;
  }

  ast::Composition CompositionRule() {
    const Token& token = Peek();
    switch (token.kind) {
      case TokenKind::kBestBinding: {
        Advance();
        Expect(TokenKind::kLBrace);
        ast::BestBinding b{Functions()};
        Expect(TokenKind::kRBrace, {"','", "'}'"});
        return b;
      }
      case TokenKind::kAllBindings: {
        Advance();
        Expect(TokenKind::kLBrace);
        ast::AllBindings a{Functions()};
        Expect(TokenKind::kRBrace, {"','", "'}'"});
        return a;
      }
      case TokenKind::kSplit:
        return SplitRule();
      case TokenKind::kIdent:
        if (token.text == kLinkWord && Peek(1).kind == TokenKind::kLParen) {
          Advance();
          Advance();
          ast::LinkRef link{ComponentIdRule()};
          Expect(TokenKind::kRParen, {"'.'", "')'"});
          return link;
        }
        return ast::Single{FunctionName(Advance().text)};
      default:
        Fail(CompositionStarts());
    }
  }

  ast::Split SplitRule() {
    Expect(TokenKind::kSplit);
    Expect(TokenKind::kLBrace);
    ast::Split split;
    split.splitter = Function();
    if (Peek().kind == TokenKind::kComma) {
      Advance();
      Expect(TokenKind::kBestBinding);
      Expect(TokenKind::kLBrace);
      split.pre = Functions();
      Expect(TokenKind::kRBrace, {"','", "'}'"});
    }
    if (Peek().kind != TokenKind::kSemicolon) {
      Fail(split.pre.empty() ? std::set<std::string>{"','", "';'"}
                             : std::set<std::string>{"';'"});
    }
    std::set<std::string> follow;
    while (Peek().kind == TokenKind::kSemicolon) {
      Advance();
      split.branches.push_back(BranchRule(follow));
    }
    follow.insert("';'");
    follow.insert("'}'");
    Expect(TokenKind::kRBrace, std::move(follow));
    return split;
  }

  // `follow` receives the extra tokens that could have continued the branch,
  // for the error message of whatever comes next.
  ast::Branch BranchRule(std::set<std::string>& follow) {
    follow.clear();
    if (Peek().kind == TokenKind::kPass) {
      Advance();
      return ast::PassBranch{};
    }
    ast::NormalBranch branch;
    branch.body = CompositionList();
    if (Peek().kind == TokenKind::kDot) {
      Advance();
      const Token& number = Expect(TokenKind::kNumber);
      if (number.text.size() > 3 || std::stoi(number.text) > kMaxReplications) {
        throw ParseError(std::to_string(number.span.begin.line) + ":" +
                             std::to_string(number.span.begin.column) +
                             ": replications must be in 1..255, got " +
                             number.text,
                         number.span, {"number in 1..255"});
      }
      branch.replications = std::stoi(number.text);
    } else {
      follow = {"','", "'.'"};
    }
    return branch;
  }

  std::vector<Token> tokens_;
  size_t index_ = 0;
};

}  // namespace

ServiceSpec Parse(std::string_view source) {
  return Parser(Tokenize(source)).Run();
}

}  // namespace chainc
