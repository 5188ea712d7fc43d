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

#include "chainc/names.h"

#include <array>

namespace chainc {
namespace {

bool IsAsciiAlpha(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

bool IsIdentifierSegment(std::string_view text) {
  if (text.empty()) return false;
  if (!IsAsciiAlpha(text.front()) && text.front() != '_') return false;
  for (char c : text.substr(1)) {
    if (!IsAsciiAlpha(c) && !IsAsciiDigit(c) && c != '_' && c != '-') {
      return false;
    }
  }
  return true;
}

bool IsReservedKeyword(std::string_view text) {
  static constexpr std::array<std::string_view, 5> kKeywords = {
      "service", "best-binding", "all-bindings", "split", "pass"};
  for (std::string_view keyword : kKeywords) {
    if (text == keyword) return true;
  }
  return false;
}

bool IsValidFunctionName(std::string_view text) {
  return IsIdentifierSegment(text) && !IsReservedKeyword(text);
}

bool IsValidComponentId(std::string_view text) {
  if (text.empty()) return false;
  size_t start = 0;
  while (true) {
    size_t dot = text.find('.', start);
    std::string_view segment = text.substr(
        start, dot == std::string_view::npos ? std::string_view::npos
                                             : dot - start);
    if (!IsIdentifierSegment(segment) || segment == "pass") return false;
    if (dot == std::string_view::npos) return true;
    start = dot + 1;
  }
}

bool IsValidEntryName(std::string_view text) {
  return IsValidComponentId(text) &&
         text.find('.') == std::string_view::npos;
}

}  // namespace chainc
