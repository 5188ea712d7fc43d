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

// Concrete text syntax of service specifications (`.sfc` files):
//
//   start      ::= 'service' '{' comp (',' comp)* '}' definition*
//   comp       ::= 'best-binding' '{' functions '}'
//                | 'all-bindings' '{' functions '}'
//                | 'split' '{' func (',' bestbind)? (';' branch)+ '}'
//                | 'link' '(' component-id ')'
//                | func
//   branch     ::= comp (',' comp)* ('.' num)? | 'pass'
//   functions  ::= func (',' func)*
//   definition ::= 'component' component-id '{' comp (',' comp)* '}'
//
// `link` and `component` are contextual words, not reserved keywords. `#`
// starts a comment that runs to the end of the line.

#ifndef CHAINC_GRAMMAR_H_
#define CHAINC_GRAMMAR_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "chainc/ast.h"
#include "chainc/diagnostic.h"

namespace chainc {

enum class TokenKind {
  kService,
  kBestBinding,
  kAllBindings,
  kSplit,
  kPass,
  kLBrace,
  kRBrace,
  kLParen,
  kRParen,
  kComma,
  kSemicolon,
  kDot,
  kNumber,
  kIdent,
  kEof,
};

std::string_view TokenKindName(TokenKind kind);

// 1-based line and column.
struct Position {
  int line = 1;
  int column = 1;
  friend auto operator<=>(const Position&, const Position&) = default;
};

// Half-open: `end` is the position just past the last character.
struct Span {
  Position begin;
  Position end;
  friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
  TokenKind kind = TokenKind::kEof;
  std::string text;
  Span span;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, Span span,
             std::set<std::string> expected = {});

  const Span& span() const { return span_; }
  // Token descriptions that would have been accepted at `span`.
  const std::set<std::string>& expected() const { return expected_; }

 private:
  Span span_;
  std::set<std::string> expected_;
};

// Maximal-munch tokenization. Throws `ParseError` on characters outside the
// alphabet and on numbers with a leading zero.
std::vector<Token> Tokenize(std::string_view source);

// Throws `ParseError` at the first token that does not fit the grammar.
ServiceSpec Parse(std::string_view source);

// Canonical single-line text: ` , `/` ; ` separators, space-padded braces,
// `.N` only for N > 1. Each definition follows on its own line. No trailing
// newline.
std::string Render(const ServiceSpec& spec);

// Indented structural dump, one node per line.
std::string DumpAst(const ServiceSpec& spec);

}  // namespace chainc

#endif  // CHAINC_GRAMMAR_H_
