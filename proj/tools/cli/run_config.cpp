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

#include "cli/run_config.hpp"

#include <fstream>
#include <set>
#include <string>
#include <utility>

#include "hetcec/codec_io.hpp"
#include "hetcec/error.hpp"

namespace hetcec::cli {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) {
  fail(ErrorKind::kInvalidArgument, "config: " + msg);
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) bad("unknown key '" + key + "' in " + where);
  }
}

std::int64_t get_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) bad(what + " must be an integer");
  return v.get<std::int64_t>();
}

std::size_t get_positive(const json& v, const std::string& what) {
  const std::int64_t x = get_int(v, what);
  if (x <= 0) bad(what + " must be positive");
  return static_cast<std::size_t>(x);
}

Rational get_rational(const json& v, const std::string& what) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error&) {
      bad(what + ": cannot parse '" + v.get<std::string>() + "'");
    }
  }
  bad(what + " must be an integer or a \"num/den\" string");
}

std::string get_string(const json& v, const std::string& what) {
  if (!v.is_string()) bad(what + " must be a string");
  return v.get<std::string>();
}

}  // namespace

RunConfig parse_run_config(const json& doc) {
  if (!doc.is_object()) bad("top level must be an object");
  reject_unknown(doc, {"N", "L", "speeds", "events", "q", "r", "data", "queries",
                       "seed", "out"},
                 "config");
  for (const char* key : {"N", "L", "speeds", "events"}) {
    if (!doc.contains(key)) bad(std::string("missing required key '") + key + "'");
  }

  RunConfig cfg;
  cfg.machine_count = static_cast<int>(get_positive(doc["N"], "N"));
  cfg.split_factor = static_cast<int>(get_positive(doc["L"], "L"));
  if (cfg.split_factor > cfg.machine_count) bad("L must not exceed N");

  const json& speeds = doc["speeds"];
  if (!speeds.is_array()) bad("speeds must be an array");
  if (speeds.size() != static_cast<std::size_t>(cfg.machine_count)) {
    bad("speeds has " + std::to_string(speeds.size()) + " entries, N=" +
        std::to_string(cfg.machine_count));
  }
  for (std::size_t i = 0; i < speeds.size(); ++i) {
    Rational s = get_rational(speeds[i], "speeds[" + std::to_string(i) + "]");
    if (s.sign() <= 0) bad("speeds[" + std::to_string(i) + "] must be positive");
    cfg.speeds.push_back(s);
  }

  const json& events = doc["events"];
  if (!events.is_array()) bad("events must be an array");
  for (std::size_t i = 0; i < events.size(); ++i) {
    const json& ev = events[i];
    const std::string where = "events[" + std::to_string(i) + "]";
    if (!ev.is_object()) bad(where + " must be an object");
    reject_unknown(ev, {"t", "available"}, where);
    if (!ev.contains("t") || !ev.contains("available")) {
      bad(where + " needs 't' and 'available'");
    }
    ElasticEvent out;
    out.t = static_cast<int>(get_int(ev["t"], where + ".t"));
    if (!ev["available"].is_array()) bad(where + ".available must be an array");
    std::set<MachineId> seen;
    for (const json& id : ev["available"]) {
      const auto m = static_cast<MachineId>(get_int(id, where + ".available"));
      if (m < 1 || m > cfg.machine_count) {
        bad(where + ": machine " + std::to_string(m) + " outside [1, " +
            std::to_string(cfg.machine_count) + "]");
      }
      if (!seen.insert(m).second) {
        bad(where + ": machine " + std::to_string(m) + " listed twice");
      }
      out.available.push_back(m);
    }
    if (!cfg.events.empty() && out.t <= cfg.events.back().t) {
      bad(where + ": t must be strictly increasing");
    }
    cfg.events.push_back(std::move(out));
  }

  if (doc.contains("q")) cfg.rows = get_positive(doc["q"], "q");
  if (doc.contains("r")) cfg.cols = get_positive(doc["r"], "r");
  if (doc.contains("data")) cfg.data_path = get_string(doc["data"], "data");
  if (doc.contains("queries")) cfg.queries_path = get_string(doc["queries"], "queries");
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer()) {
      bad("seed must be a non-negative integer");
    }
    if (doc["seed"].is_number_integer() && doc["seed"].get<std::int64_t>() < 0) {
      bad("seed must be a non-negative integer");
    }
    cfg.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("out")) cfg.output_dir = get_string(doc["out"], "out");
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kInvalidArgument, "cannot open config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    bad(std::string("not valid JSON: ") + e.what());
  }
  RunConfig cfg = parse_run_config(doc);
  cfg.base_dir = path.parent_path();
  return cfg;
}

nlohmann::ordered_json to_json(const RunConfig& cfg) {
  nlohmann::ordered_json doc;
  doc["N"] = cfg.machine_count;
  doc["L"] = cfg.split_factor;
  auto speeds = nlohmann::ordered_json::array();
  for (const Rational& s : cfg.speeds) speeds.push_back(s.to_string());
  doc["speeds"] = std::move(speeds);
  auto events = nlohmann::ordered_json::array();
  for (const ElasticEvent& ev : cfg.events) {
    events.push_back({{"t", ev.t}, {"available", ev.available}});
  }
  doc["events"] = std::move(events);
  if (cfg.rows) doc["q"] = *cfg.rows;
  if (cfg.cols) doc["r"] = *cfg.cols;
  if (cfg.data_path) doc["data"] = *cfg.data_path;
  if (cfg.queries_path) doc["queries"] = *cfg.queries_path;
  doc["seed"] = cfg.seed;
  if (cfg.output_dir) doc["out"] = *cfg.output_dir;
  return doc;
}

Timeline make_timeline(const RunConfig& cfg) {
  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() ? path : cfg.base_dir / path;
  };
  Timeline tl;
  tl.machine_count = cfg.machine_count;
  tl.split_factor = cfg.split_factor;
  tl.rows = cfg.rows;
  tl.speeds = cfg.speeds;
  tl.events = cfg.events;
  tl.seed = cfg.seed;
  if (cfg.data_path) {
    tl.data = read_integer_matrix_file(resolve(*cfg.data_path));
    tl.cols = tl.data->cols();
    if (cfg.cols && *cfg.cols != tl.cols) bad("r does not match the data file");
  } else {
    tl.cols = cfg.cols.value_or(kDefaultColumns);
  }
  if (cfg.queries_path) {
    const FieldMatrix q = read_integer_matrix_file(resolve(*cfg.queries_path));
    if (q.cols() != tl.cols) bad("query vectors must have r entries");
    for (std::size_t i = 0; i < q.rows(); ++i) {
      tl.queries.emplace_back(q.row(i).begin(), q.row(i).end());
    }
  }
  return tl;
}

}  // namespace hetcec::cli
