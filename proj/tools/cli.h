// Copyright 2026 The tssenum Authors
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
#ifndef TSS_TOOLS_CLI_H_
#define TSS_TOOLS_CLI_H_

#include <string>
#include <vector>

namespace tss::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDiscrepancies = 2;

struct RunResult {
  int exit_code = kExitOk;
  std::string out;  // rendered payload (empty when written to --output)
  std::string err;  // diagnostics
};

// Runs one command line. `args` excludes the program name.
RunResult Run(const std::vector<std::string>& args);

}  // namespace tss::cli

#endif  // TSS_TOOLS_CLI_H_
