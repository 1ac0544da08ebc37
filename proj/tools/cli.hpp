// Copyright 2026 The agvpath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AGVPATH_TOOLS_CLI_HPP_
#define AGVPATH_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace agvpath::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,  // discontinuous path or infeasible repair
  kExitUsage = 2,   // parse, schema or usage error
};

// Runs the agvpath command line. args excludes the program name. Reports go
// to out, diagnostics to err; files named by --out are written directly.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace agvpath::cli

#endif  // AGVPATH_TOOLS_CLI_HPP_
