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

#ifndef CHAINC_DIAGNOSTIC_H_
#define CHAINC_DIAGNOSTIC_H_

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chainc {

// Stable diagnostic codes. The textual form (see `CodeName`) is part of the
// CLI contract and must not change.
enum class Code {
  kParse,             // E_PARSE
  kInvalidSpec,       // E_INVALID_SPEC
  kInvalidModel,      // E_INVALID_MODEL
  kBadName,           // E_BAD_NAME
  kEmptyService,      // E_EMPTY_SERVICE
  kEmptySequence,     // E_EMPTY_SEQUENCE
  kShortSequence,     // E_SHORT_SEQUENCE
  kEmptyFunctions,    // E_EMPTY_FUNCTIONS
  kDupFunction,       // E_DUP_FUNCTION
  kEmptySplit,        // E_EMPTY_SPLIT
  kEmptyBranch,       // E_EMPTY_BRANCH
  kEmptyComponent,    // E_EMPTY_COMPONENT
  kDupId,             // E_DUP_ID
  kUnresolvedRef,     // E_UNRESOLVED_REF
  kCyclicRef,         // E_CYCLIC_REF
  kBadStart,          // E_BAD_START
  kMalformed,         // E_MALFORMED
  kSchema,            // E_SCHEMA
  kRange,             // E_RANGE
  kCapExceeded,       // E_CAP_EXCEEDED
  kEmptyCandidates,   // E_EMPTY_CANDIDATES
  kInvalidCost,       // E_INVALID_COST
  kDuplicateName,     // E_DUPLICATE_NAME
  kNotFound,          // E_NOT_FOUND
  kIo,                // E_IO
  kUnreachableNode,   // E_UNREACHABLE_NODE
  kUsage,             // E_USAGE
  kAllPassSplit,      // W_ALL_PASS
  kDanglingPass,      // W_DANGLING_PASS
  kUnknownKey,        // W_UNKNOWN_KEY
};

std::string_view CodeName(Code code);

enum class Severity { kError, kWarning };

struct Diagnostic {
  Severity severity = Severity::kError;
  Code code = Code::kInvalidSpec;
  std::string message;
  // Dotted/indexed location inside the checked value, e.g.
  // `compositions[0].branches[2]`. Empty when the whole value is meant.
  std::string path;

  bool is_error() const { return severity == Severity::kError; }
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

Diagnostic MakeError(Code code, std::string message, std::string path = {});
Diagnostic MakeWarning(Code code, std::string message, std::string path = {});

bool HasErrors(const std::vector<Diagnostic>& diagnostics);

// `code: message @ path` (the ` @ path` suffix is omitted for empty paths).
std::string FormatDiagnostic(const Diagnostic& diagnostic);
std::ostream& operator<<(std::ostream& os, const Diagnostic& diagnostic);

// Thrown by operations that cannot produce a value. Carries the primary code
// plus any supporting diagnostics that led to the failure.
class Error : public std::runtime_error {
 public:
  Error(Code code, const std::string& message, std::string path = {},
        std::vector<Diagnostic> details = {});

  Code code() const { return code_; }
  const std::string& path() const { return path_; }
  const std::vector<Diagnostic>& details() const { return details_; }

  // The error itself followed by its details, ready for reporting.
  std::vector<Diagnostic> diagnostics() const;

 private:
  Code code_;
  std::string path_;
  std::vector<Diagnostic> details_;
};

}  // namespace chainc

#endif  // CHAINC_DIAGNOSTIC_H_
