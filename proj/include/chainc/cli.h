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

#ifndef CHAINC_CLI_H_
#define CHAINC_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace chainc {

enum ExitCode : int {
  kExitOk = 0,
  kExitDiagnostics = 1,
  kExitUsage = 2,
  kExitIo = 3,
  kExitCapExceeded = 4,
};

// Runs one `chainc` invocation. `args` excludes the program name. Nothing is
// written to output files unless the command succeeds.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace chainc

#endif  // CHAINC_CLI_H_
