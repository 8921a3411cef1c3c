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

#ifndef HETCEC_TOOLS_CLI_RUN_CONFIG_HPP_
#define HETCEC_TOOLS_CLI_RUN_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hetcec/rational.hpp"
#include "hetcec/simulator.hpp"
#include "json.hpp"

namespace hetcec::cli {

// JSON run configuration:
//
//   {
//     "N": 6, "L": 3,
//     "speeds": [2, 2, "3", "3/1", 4, 4],
//     "events": [{"t": 1, "available": [1, 2, 3, 4, 5, 6]}, ...],
//     "q": 630, "r": 4,             optional
//     "data": "matrix.txt",         optional, integer matrix text file
//     "queries": "queries.txt",     optional, one query vector per line
//     "seed": 7,                    optional
//     "out": "results"              optional
//   }
//
// Unknown keys are rejected. Relative paths resolve against the directory
// of the config file.
struct RunConfig {
  int machine_count = 0;
  int split_factor = 0;
  std::vector<Rational> speeds;
  std::vector<ElasticEvent> events;
  std::optional<std::size_t> rows;
  std::optional<std::size_t> cols;
  std::optional<std::string> data_path;
  std::optional<std::string> queries_path;
  std::uint64_t seed = 0;
  std::optional<std::string> output_dir;
  std::filesystem::path base_dir;  // not serialized
};

inline constexpr std::size_t kDefaultColumns = 4;

// Throws Error(kInvalidArgument) on any schema violation.
RunConfig parse_run_config(const nlohmann::json& doc);
RunConfig load_run_config(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const RunConfig& config);

// Resolves data and query files and fills in defaults.
Timeline make_timeline(const RunConfig& config);

}  // namespace hetcec::cli

#endif  // HETCEC_TOOLS_CLI_RUN_CONFIG_HPP_
