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

#include <cstdio>
#include <utility>

#include "chainc/grammar.h"

namespace chainc {
namespace {

bool IsIdentStart(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

bool IsIdentChar(char c) { return IsIdentStart(c) || IsDigit(c) || c == '-'; }

TokenKind KeywordOrIdent(std::string_view text) {
  if (text == "service") return TokenKind::kService;
  if (text == "best-binding") return TokenKind::kBestBinding;
  if (text == "all-bindings") return TokenKind::kAllBindings;
  if (text == "split") return TokenKind::kSplit;
  if (text == "pass") return TokenKind::kPass;
  return TokenKind::kIdent;
}

std::string PositionText(Position p) {
  return std::to_string(p.line) + ":" + std::to_string(p.column);
}

class Lexer {
 public:
  explicit Lexer(std::string_view source) : source_(source) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    while (true) {
      SkipTrivia();
      if (AtEnd()) break;
      tokens.push_back(Next());
    }
    tokens.push_back({TokenKind::kEof, "", {position_, position_}});
    return tokens;
  }

 private:
  bool AtEnd() const { return index_ >= source_.size(); }
  char Peek() const { return source_[index_]; }

  void Advance() {
    if (source_[index_] == '\n') {
      ++position_.line;
      position_.column = 1;
    } else {
      ++position_.column;
    }
    ++index_;
  }

  void SkipTrivia() {
    while (!AtEnd()) {
      char c = Peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        Advance();
      } else if (c == '#') {
        while (!AtEnd() && Peek() != '\n') Advance();
      } else {
        return;
      }
    }
  }

  Token Next() {
    Position begin = position_;
    size_t start = index_;
    char c = Peek();

    auto single = [&](TokenKind kind) {
      Advance();
      return Token{kind, std::string(1, c), {begin, position_}};
    };
    switch (c) {
      case '{': return single(TokenKind::kLBrace);
      case '}': return single(TokenKind::kRBrace);
      case '(': return single(TokenKind::kLParen);
      case ')': return single(TokenKind::kRParen);
      case ',': return single(TokenKind::kComma);
      case ';': return single(TokenKind::kSemicolon);
      case '.': return single(TokenKind::kDot);
      default: break;
    }

    if (IsDigit(c)) {
      while (!AtEnd() && IsDigit(Peek())) Advance();
      std::string text(source_.substr(start, index_ - start));
      if (text.front() == '0') {
        throw ParseError(PositionText(begin) +
                             ": number must not start with zero: '" + text +
                             "'",
                         {begin, position_}, {"nonzero digit"});
      }
      return {TokenKind::kNumber, std::move(text), {begin, position_}};
    }

    if (IsIdentStart(c)) {
      while (!AtEnd() && IsIdentChar(Peek())) Advance();
      std::string text(source_.substr(start, index_ - start));
      return {KeywordOrIdent(text), std::move(text), {begin, position_}};
    }

    Advance();
    std::string shown;
    if (static_cast<unsigned char>(c) < 0x20 ||
        static_cast<unsigned char>(c) >= 0x7f) {
      char buf[8];
      std::snprintf(buf, sizeof(buf), "0x%02X", static_cast<unsigned char>(c));
      shown = buf;
    } else {
      shown = std::string("'") + c + "'";
    }
    throw ParseError(PositionText(begin) + ": unexpected character " + shown,
                     {begin, position_});
  }

  std::string_view source_;
  size_t index_ = 0;
  Position position_;
};

}  // namespace

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kService: return "'service'";
    case TokenKind::kBestBinding: return "'best-binding'";
    case TokenKind::kAllBindings: return "'all-bindings'";
    case TokenKind::kSplit: return "'split'";
    case TokenKind::kPass: return "'pass'";
    case TokenKind::kLBrace: return "'{'";
    case TokenKind::kRBrace: return "'}'";
    case TokenKind::kLParen: return "'('";
    case TokenKind::kRParen: return "')'";
    case TokenKind::kComma: return "','";
    case TokenKind::kSemicolon: return "';'";
    case TokenKind::kDot: return "'.'";
    case TokenKind::kNumber: return "number";
    case TokenKind::kIdent: return "identifier";
    case TokenKind::kEof: return "end of input";
  }
  return "token";
}

ParseError::ParseError(const std::string& message, Span span,
                       std::set<std::string> expected)
    : Error(Code::kParse, message, PositionText(span.begin)),
      span_(span),
      expected_(std::move(expected)) {}

std::vector<Token> Tokenize(std::string_view source) {
  return Lexer(source).Run();
}

}  // namespace chainc
