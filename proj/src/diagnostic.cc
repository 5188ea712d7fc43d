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

#include "chainc/diagnostic.h"

#include <algorithm>
#include <utility>

namespace chainc {

std::string_view CodeName(Code code) {
  switch (code) {
    case Code::kParse: return "E_PARSE";
    case Code::kInvalidSpec: return "E_INVALID_SPEC";
    case Code::kInvalidModel: return "E_INVALID_MODEL";
    case Code::kBadName: return "E_BAD_NAME";
    case Code::kEmptyService: return "E_EMPTY_SERVICE";
    case Code::kEmptySequence: return "E_EMPTY_SEQUENCE";
    case Code::kShortSequence: return "E_SHORT_SEQUENCE";
    case Code::kEmptyFunctions: return "E_EMPTY_FUNCTIONS";
    case Code::kDupFunction: return "E_DUP_FUNCTION";
    case Code::kEmptySplit: return "E_EMPTY_SPLIT";
    case Code::kEmptyBranch: return "E_EMPTY_BRANCH";
    case Code::kEmptyComponent: return "E_EMPTY_COMPONENT";
    case Code::kDupId: return "E_DUP_ID";
    case Code::kUnresolvedRef: return "E_UNRESOLVED_REF";
    case Code::kCyclicRef: return "E_CYCLIC_REF";
    case Code::kBadStart: return "E_BAD_START";
    case Code::kMalformed: return "E_MALFORMED";
    case Code::kSchema: return "E_SCHEMA";
    case Code::kRange: return "E_RANGE";
    case Code::kCapExceeded: return "E_CAP_EXCEEDED";
    case Code::kEmptyCandidates: return "E_EMPTY_CANDIDATES";
    case Code::kInvalidCost: return "E_INVALID_COST";
    case Code::kDuplicateName: return "E_DUPLICATE_NAME";
    case Code::kNotFound: return "E_NOT_FOUND";
    case Code::kIo: return "E_IO";
    case Code::kUnreachableNode: return "E_UNREACHABLE_NODE";
    case Code::kUsage: return "E_USAGE";
    case Code::kAllPassSplit: return "W_ALL_PASS";
    case Code::kDanglingPass: return "W_DANGLING_PASS";
    case Code::kUnknownKey: return "W_UNKNOWN_KEY";
  }
  return "E_UNKNOWN";
}

Diagnostic MakeError(Code code, std::string message, std::string path) {
  return {Severity::kError, code, std::move(message), std::move(path)};
}

Diagnostic MakeWarning(Code code, std::string message, std::string path) {
  return {Severity::kWarning, code, std::move(message), std::move(path)};
}

bool HasErrors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.is_error(); });
}

std::string FormatDiagnostic(const Diagnostic& diagnostic) {
  std::string out(CodeName(diagnostic.code));
  out += ": ";
  out += diagnostic.message;
  if (!diagnostic.path.empty()) {
    out += " @ ";
    out += diagnostic.path;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Diagnostic& diagnostic) {
  return os << FormatDiagnostic(diagnostic);
}

Error::Error(Code code, const std::string& message, std::string path,
             std::vector<Diagnostic> details)
    : std::runtime_error(message),
      code_(code),
      path_(std::move(path)),
      details_(std::move(details)) {}

std::vector<Diagnostic> Error::diagnostics() const {
  std::vector<Diagnostic> out;
  out.push_back(MakeError(code_, what(), path_));
  out.insert(out.end(), details_.begin(), details_.end());
  return out;
}

}  // namespace chainc
