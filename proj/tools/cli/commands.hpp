// Copyright 2026 The hetcec Authors
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

#ifndef HETCEC_TOOLS_CLI_COMMANDS_HPP_
#define HETCEC_TOOLS_CLI_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace hetcec::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInvalidConfig = 2,
  kExitInfeasible = 3,
  kExitInternal = 4,
};

struct CommandOptions {
  std::filesystem::path config;
  std::optional<std::filesystem::path> out;
  std::optional<std::uint64_t> seed;
  std::vector<std::filesystem::path> plans;  // verify only
};

// optimize | assign | simulate | verify. Results go to `out`; failures are
// reported on `err` as a single-line JSON object
//   {"error": {"kind": ..., "exit_code": ..., "message": ..., "step": ...}}
// and mapped to the exit codes above.
int run_command(std::string_view name, const CommandOptions& options,
                std::ostream& out, std::ostream& err);

// Writes a failure object for an error raised outside run_command (e.g.
// argument parsing).
void report_error(std::ostream& err, int exit_code, std::string_view kind,
                  std::string_view message);

}  // namespace hetcec::cli

#endif  // HETCEC_TOOLS_CLI_COMMANDS_HPP_
