// Copyright 2026 The Authors.
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

#ifndef MMC_TOOLS_CLI_HPP_
#define MMC_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace mmc::cli {

/// Exit statuses of the `mmc` command.
enum ExitCode : int {
  kSuccess = 0,          // success, or the matching has the property
  kRefuted = 1,          // property refuted
  kUsage = 2,            // usage or parse error
  kInvalidMatching = 3,  // matching violates a matching condition
  kBoundExceeded = 4,    // an exhaustive bound was exceeded
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// its exit status. All output goes to `out` and `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mmc::cli

#endif  // MMC_TOOLS_CLI_HPP_
