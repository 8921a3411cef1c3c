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

#include "cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "cli/run_config.hpp"
#include "cli/serialization.hpp"
#include "hetcec/assignment.hpp"
#include "hetcec/codec_io.hpp"
#include "hetcec/error.hpp"
#include "hetcec/load_optimizer.hpp"
#include "hetcec/simulator.hpp"
#include "json.hpp"

namespace hetcec::cli {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

template <typename F>
auto at_step(int t, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Error& e) {
    if (e.step()) throw;
    throw Error(e.kind(), "step t=" + std::to_string(t) + ": " + e.what(), t);
  }
}

RunConfig load(const CommandOptions& opts) {
  RunConfig cfg = load_run_config(opts.config);
  if (opts.seed) cfg.seed = *opts.seed;
  return cfg;
}

std::optional<std::filesystem::path> output_dir(const CommandOptions& opts,
                                                const RunConfig& cfg) {
  if (opts.out) return opts.out;
  if (cfg.output_dir) return cfg.base_dir / *cfg.output_dir;
  return std::nullopt;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::kInvalidArgument, "cannot write " + path.string());
  f << text;
}

struct StepOptimum {
  const ElasticEvent* event;
  OptimizerResult optimum;
};

std::vector<StepOptimum> optimize_all(const RunConfig& cfg) {
  const SpeedVector speeds(cfg.speeds);
  std::vector<StepOptimum> out;
  for (const ElasticEvent& ev : cfg.events) {
    out.push_back(at_step(ev.t, [&] {
      const AvailableSet available(ev.available, cfg.machine_count);
      return StepOptimum{&ev, optimal_load(speeds, available, cfg.split_factor)};
    }));
  }
  return out;
}

int cmd_optimize(const CommandOptions& opts, std::ostream& out) {
  const RunConfig cfg = load(opts);
  ordered_json doc;
  doc["L"] = cfg.split_factor;
  auto events = ordered_json::array();
  for (const StepOptimum& s : optimize_all(cfg)) {
    ordered_json ev;
    ev["t"] = s.event->t;
    ev["available"] = s.optimum.loads.machines;
    ev["loads"] = loads_to_json(s.optimum.loads);
    ev["c_star"] = s.optimum.c_star.to_string();
    ev["k_star"] = s.optimum.k_star;
    events.push_back(std::move(ev));
  }
  doc["events"] = std::move(events);
  const std::string text = doc.dump(2) + "\n";
  out << text;
  if (auto dir = output_dir(opts, cfg)) write_file(*dir / "optimize.json", text);
  return kExitOk;
}

int cmd_assign(const CommandOptions& opts, std::ostream& out) {
  const RunConfig cfg = load(opts);
  const int big_l = cfg.split_factor;
  const std::vector<StepOptimum> optima = optimize_all(cfg);

  std::vector<AssignmentPlan> plans;
  for (const StepOptimum& s : optima) {
    plans.push_back(at_step(s.event->t, [&] {
      return fill_assignment(s.optimum.loads, big_l);
    }));
  }

  std::size_t rows = 0;
  if (cfg.rows) {
    rows = *cfg.rows;
  } else if (cfg.data_path) {
    rows = make_timeline(cfg).data->rows();
  } else {
    rows = auto_row_count(plans, big_l);
  }

  ordered_json doc;
  doc["L"] = big_l;
  doc["q"] = rows;
  auto all = ordered_json::array();
  const auto dir = output_dir(opts, cfg);
  for (std::size_t i = 0; i < optima.size(); ++i) {
    const int t = optima[i].event->t;
    const AssignmentPlan plan = at_step(t, [&] {
      return materialize_rows(std::move(plans[i]), rows, big_l);
    });
    ordered_json ev;
    ev["t"] = t;
    ev["available"] = optima[i].optimum.loads.machines;
    ev["L"] = big_l;
    ev["q"] = rows;
    ev["rows_per_block"] = plan.rows_per_block;
    ev["loads"] = loads_to_json(optima[i].optimum.loads);
    ev["c_star"] = optima[i].optimum.c_star.to_string();
    ev["blocks"] = blocks_to_json(plan);
    if (dir) {
      write_file(*dir / ("plan_t" + std::to_string(t) + ".json"), ev.dump(2) + "\n");
    }
    all.push_back(std::move(ev));
  }
  doc["plans"] = std::move(all);
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_simulate(const CommandOptions& opts, std::ostream& out) {
  RunConfig cfg = load(opts);
  const Timeline timeline = make_timeline(cfg);
  const RunReport report = run_timeline(timeline);

  std::ostringstream csv;
  write_steps_csv(csv, report);

  RunConfig resolved = cfg;
  resolved.rows = report.rows;
  resolved.cols = report.cols;
  ordered_json summary;
  summary["config"] = to_json(resolved);
  summary["q"] = report.rows;
  summary["r"] = report.cols;
  summary["seed"] = report.seed;
  summary["baseline"] =
      "reconstructed equal-load cyclic assignment (each machine L/N_t)";
  summary["all_verified"] =
      std::all_of(report.steps.begin(), report.steps.end(),
                  [](const StepReport& s) { return s.verified; });
  auto steps = ordered_json::array();
  for (const StepReport& s : report.steps) steps.push_back(step_to_json(s));
  summary["steps"] = std::move(steps);

  out << csv.str();
  if (auto dir = output_dir(opts, cfg)) {
    write_file(*dir / "steps.csv", csv.str());
    write_file(*dir / "summary.json", summary.dump(2) + "\n");
  }
  return summary["all_verified"].get<bool>() ? kExitOk : kExitInternal;
}

int cmd_verify(const CommandOptions& opts, std::ostream& out) {
  const RunConfig cfg = load(opts);
  std::vector<std::filesystem::path> files = opts.plans;
  if (files.empty()) {
    const auto dir = output_dir(opts, cfg);
    if (dir && std::filesystem::is_directory(*dir)) {
      for (const auto& entry : std::filesystem::directory_iterator(*dir)) {
        const std::string name = entry.path().filename().string();
        if (name.starts_with("plan_t") && name.ends_with(".json")) {
          files.push_back(entry.path());
        }
      }
    }
    std::sort(files.begin(), files.end());
  }
  if (files.empty()) {
    fail(ErrorKind::kInvalidArgument, "no plan files to verify");
  }

  const SpeedVector speeds(cfg.speeds);
  ordered_json doc;
  auto results = ordered_json::array();
  bool all_passed = true;
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::kInvalidArgument, "cannot open " + path.string());
    json plan_doc;
    try {
      plan_doc = json::parse(in);
    } catch (const json::parse_error& e) {
      fail(ErrorKind::kInvalidArgument, path.string() + ": " + e.what());
    }
    if (!plan_doc.is_object() || !plan_doc.contains("t") ||
        !plan_doc["t"].is_number_integer() || !plan_doc.contains("blocks")) {
      fail(ErrorKind::kInvalidArgument, path.string() + ": not a plan document");
    }
    const int t = plan_doc["t"].get<int>();
    auto ev = std::find_if(cfg.events.begin(), cfg.events.end(),
                           [&](const ElasticEvent& e) { return e.t == t; });
    if (ev == cfg.events.end()) {
      fail(ErrorKind::kInvalidArgument,
           path.string() + ": no event with t=" + std::to_string(t));
    }
    const std::size_t per_block =
        plan_doc.contains("rows_per_block") ? plan_doc["rows_per_block"].get<std::size_t>() : 0;
    const VerificationReport report = at_step(t, [&] {
      const AvailableSet available(ev->available, cfg.machine_count);
      const OptimizerResult opt = optimal_load(speeds, available, cfg.split_factor);
      const AssignmentPlan plan =
          plan_from_json(plan_doc["blocks"], cfg.split_factor, per_block);
      return verify_assignment(plan, opt.loads, cfg.split_factor);
    });
    all_passed = all_passed && report.passed();
    results.push_back({{"file", path.filename().string()},
                       {"t", t},
                       {"passed", report.passed()},
                       {"failures", report.failures}});
  }
  doc["passed"] = all_passed;
  doc["results"] = std::move(results);
  out << doc.dump(2) << "\n";
  return all_passed ? kExitOk : kExitVerificationFailed;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return kExitInvalidConfig;
    case ErrorKind::kInfeasible:
      return kExitInfeasible;
    case ErrorKind::kInternal:
      return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace

void report_error(std::ostream& err, int exit_code, std::string_view kind,
                  std::string_view message) {
  ordered_json e;
  e["kind"] = kind;
  e["exit_code"] = exit_code;
  e["message"] = message;
  err << ordered_json{{"error", e}}.dump() << "\n";
}

int run_command(std::string_view name, const CommandOptions& options,
                std::ostream& out, std::ostream& err) {
  try {
    if (name == "optimize") return cmd_optimize(options, out);
    if (name == "assign") return cmd_assign(options, out);
    if (name == "simulate") return cmd_simulate(options, out);
    if (name == "verify") return cmd_verify(options, out);
    report_error(err, kExitInvalidConfig, "invalid_argument",
                 "unknown command '" + std::string(name) + "'");
    return kExitInvalidConfig;
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    ordered_json obj;
    obj["kind"] = to_string(e.kind());
    obj["exit_code"] = code;
    obj["message"] = e.what();
    if (e.step()) obj["step"] = *e.step();
    err << ordered_json{{"error", obj}}.dump() << "\n";
    return code;
  } catch (const std::exception& e) {
    report_error(err, kExitInternal, "internal", e.what());
    return kExitInternal;
  }
}

}  // namespace hetcec::cli
