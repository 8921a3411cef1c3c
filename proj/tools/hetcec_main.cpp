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

// hetcec: optimal loads, assignments and coded-execution simulation for
// heterogeneous coded elastic computing.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Heterogeneous coded elastic computing scheduler"};
  app.require_subcommand(1);

  hetcec::cli::CommandOptions opts;
  std::string config;
  std::string out;
  std::uint64_t seed = 0;
  std::vector<std::string> plans;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config, "Run config (JSON)")->required();
    sub->add_option("--out", out, "Output directory");
    sub->add_option("--seed", seed, "Override the config seed");
  };
  add_common(app.add_subcommand("optimize", "Optimal load vector per event"));
  add_common(app.add_subcommand("assign", "Row assignment plan per event"));
  add_common(app.add_subcommand("simulate", "Run the full coded timeline"));
  auto* verify = app.add_subcommand("verify", "Check emitted plan files");
  add_common(verify);
  verify->add_option("--plan", plans, "Plan file(s); defaults to plan_t*.json in --out");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    hetcec::cli::report_error(std::cerr, hetcec::cli::kExitInvalidConfig,
                              "invalid_argument", e.what());
    return hetcec::cli::kExitInvalidConfig;
  }

  CLI::App* sub = app.get_subcommands().front();
  opts.config = config;
  if (!out.empty()) opts.out = out;
  if (sub->count("--seed") > 0) opts.seed = seed;
  for (const auto& p : plans) opts.plans.emplace_back(p);
  return hetcec::cli::run_command(sub->get_name(), opts, std::cout, std::cerr);
}
