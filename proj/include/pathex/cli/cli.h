// Copyright 2026 The pathex Authors. All Rights Reserved.
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

/// @file cli.h
/// @brief The `pathex` command line: extract, bench, compare, inspect,
/// generate.
///
/// Exit codes: 0 ok, 2 usage, 3 I/O or parse failure, 4 bench outputs
/// disagree, 5 compare tolerance exceeded, 6 synthetic packing infeasible.

#ifndef PATHEX_CLI_CLI_H_
#define PATHEX_CLI_CLI_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace pathex::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitIo = 3,
  kExitBenchMismatch = 4,
  kExitCompareTolerance = 5,
  kExitGenerationInfeasible = 6,
};

/// `args` excludes the program name. `env_budget` stands in for the
/// PATHEX_MEMORY_BUDGET variable.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
           const std::optional<std::string>& env_budget = std::nullopt);

/// Entry point used by the executable; reads the environment.
int Main(int argc, char** argv);

}  // namespace pathex::cli

#endif  // PATHEX_CLI_CLI_H_
