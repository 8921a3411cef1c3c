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

#include "hetcec/simulator.hpp"

#include <algorithm>
#include <future>
#include <iterator>
#include <ostream>
#include <random>
#include <string>
#include <utility>

#include "hetcec/error.hpp"

namespace hetcec {
namespace {

// Distinct streams for the data matrix and the query vectors, so the data
// depends only on (seed, q, r).
constexpr std::uint64_t kDataStream = 1;
constexpr std::uint64_t kQueryStream = 2;

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

FieldElement random_element(std::mt19937_64& engine) {
  std::uniform_int_distribution<std::uint64_t> dist(0, kFieldPrime - 1);
  return FieldElement(dist(engine));
}

template <typename F>
auto at_step(int t, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Error& e) {
    if (e.step()) throw;
    throw Error(e.kind(), "step t=" + std::to_string(t) + ": " + e.what(), t);
  }
}

void validate(const Timeline& tl) {
  if (tl.split_factor < 1 || tl.machine_count < tl.split_factor) {
    fail(ErrorKind::kInvalidArgument,
         "need 1 <= L <= N, got N=" + std::to_string(tl.machine_count) +
             ", L=" + std::to_string(tl.split_factor));
  }
  if (static_cast<int>(tl.speeds.size()) != tl.machine_count) {
    fail(ErrorKind::kInvalidArgument,
         std::to_string(tl.speeds.size()) + " speeds for N=" +
             std::to_string(tl.machine_count) + " machines");
  }
  for (std::size_t i = 1; i < tl.events.size(); ++i) {
    if (tl.events[i].t <= tl.events[i - 1].t) {
      fail(ErrorKind::kInvalidArgument,
           "event times must be strictly increasing (t=" +
               std::to_string(tl.events[i].t) + " after t=" +
               std::to_string(tl.events[i - 1].t) + ")");
    }
  }
  if (tl.data) {
    if (tl.rows && *tl.rows != tl.data->rows()) {
      fail(ErrorKind::kInvalidArgument, "q does not match the data matrix");
    }
    if (tl.cols != 0 && tl.cols != tl.data->cols()) {
      fail(ErrorKind::kInvalidArgument, "r does not match the data matrix");
    }
  } else if (tl.cols == 0) {
    fail(ErrorKind::kInvalidArgument, "column count r must be positive");
  }
  if (!tl.queries.empty() && tl.queries.size() != tl.events.size()) {
    fail(ErrorKind::kInvalidArgument,
         std::to_string(tl.queries.size()) + " query vectors for " +
             std::to_string(tl.events.size()) + " events");
  }
}

struct PlannedStep {
  OptimizerResult optimum;
  AssignmentPlan plan;
};

}  // namespace

FieldMatrix random_matrix(std::size_t rows, std::size_t cols,
                          std::uint64_t seed) {
  auto engine = make_engine(seed, kDataStream);
  FieldMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_element(engine);
  }
  return m;
}

std::vector<FieldVector> random_queries(std::size_t count, std::size_t cols,
                                        std::uint64_t seed) {
  auto engine = make_engine(seed, kQueryStream);
  std::vector<FieldVector> out(count, FieldVector(cols));
  for (auto& w : out) {
    for (auto& e : w) e = random_element(engine);
  }
  return out;
}

BaselineResult cyclic_baseline(const AvailableSet& available, int split_factor,
                               const SpeedVector& speeds) {
  if (available.size() < split_factor) {
    fail(ErrorKind::kInfeasible,
         std::to_string(available.size()) +
             " machines available, at least L=" + std::to_string(split_factor) +
             " required");
  }
  const auto members = available.machines();
  const int n_avail = available.size();
  BaselineResult out;
  out.loads.split_factor = split_factor;
  out.loads.machines.assign(members.begin(), members.end());
  out.loads.loads.assign(members.size(), Rational(split_factor, n_avail));
  out.plan.split_factor = split_factor;
  for (int j = 0; j < n_avail; ++j) {
    AssignmentBlock block;
    block.alpha = Rational(1, n_avail);
    for (int k = 0; k < split_factor; ++k) {
      block.machines.push_back(members[static_cast<std::size_t>((j + k) % n_avail)]);
    }
    std::sort(block.machines.begin(), block.machines.end());
    out.plan.blocks.push_back(std::move(block));
  }
  out.time = load_time(out.loads, speeds);
  return out;
}

Rational overlap_metric(const AssignmentPlan* previous,
                        const AssignmentPlan& current) {
  if (previous == nullptr) return Rational(0);
  if (!previous->materialized() || !current.materialized() ||
      previous->rows_per_block != current.rows_per_block) {
    fail(ErrorKind::kInvalidArgument,
         "overlap needs two plans materialized over the same rows");
  }
  std::int64_t current_pairs = 0;
  std::int64_t retained = 0;
  for (const MachineWorkset& w : current.worksets) {
    current_pairs += static_cast<std::int64_t>(w.rows.size());
    const auto& before = previous->rows_of(w.machine);
    std::vector<std::size_t> common;
    std::set_intersection(w.rows.begin(), w.rows.end(), before.begin(),
                          before.end(), std::back_inserter(common));
    retained += static_cast<std::int64_t>(common.size());
  }
  if (current_pairs == 0) return Rational(0);
  return Rational(retained, current_pairs);
}

std::size_t auto_row_count(const std::vector<AssignmentPlan>& plans,
                           int split_factor) {
  std::int64_t block_lcm = 1;
  for (const AssignmentPlan& plan : plans) {
    const auto need = static_cast<std::int64_t>(min_rows_per_block(plan));
    if (need > kMaxAutoRowsPerBlock) {
      block_lcm = need;
      break;
    }
    block_lcm = checked_lcm(block_lcm, need);
    if (block_lcm > kMaxAutoRowsPerBlock) break;
  }
  if (block_lcm > kMaxAutoRowsPerBlock) {
    fail(ErrorKind::kInfeasible, "auto-sized q/L exceeds " +
                                     std::to_string(kMaxAutoRowsPerBlock) +
                                     " rows; set q explicitly");
  }
  return static_cast<std::size_t>(block_lcm) * static_cast<std::size_t>(split_factor);
}

RunReport run_timeline(const Timeline& tl) {
  validate(tl);
  const int big_l = tl.split_factor;
  const SpeedVector speeds(tl.speeds);

  // Pass 1: loads and block fractions for every step.
  std::vector<PlannedStep> planned;
  planned.reserve(tl.events.size());
  for (const ElasticEvent& ev : tl.events) {
    planned.push_back(at_step(ev.t, [&] {
      const AvailableSet available(ev.available, tl.machine_count);
      OptimizerResult opt = optimal_load(speeds, available, big_l);
      AssignmentPlan plan = fill_assignment(opt.loads, big_l);
      return PlannedStep{std::move(opt), std::move(plan)};
    }));
  }

  RunReport report;
  report.seed = tl.seed;
  if (tl.data) {
    report.rows = tl.data->rows();
  } else if (tl.rows) {
    report.rows = *tl.rows;
  } else {
    std::vector<AssignmentPlan> plans;
    plans.reserve(planned.size());
    for (const PlannedStep& p : planned) plans.push_back(p.plan);
    report.rows = auto_row_count(plans, big_l);
  }
  report.cols = tl.data ? tl.data->cols() : tl.cols;

  // Pass 2: lay out rows now that q is fixed.
  for (std::size_t i = 0; i < planned.size(); ++i) {
    planned[i].plan = at_step(tl.events[i].t, [&] {
      return materialize_rows(std::move(planned[i].plan), report.rows, big_l);
    });
  }

  const DataMatrix data(tl.data ? *tl.data
                                : random_matrix(report.rows, report.cols, tl.seed),
                        big_l);
  const std::vector<FieldVector> queries =
      tl.queries.empty() ? random_queries(tl.events.size(), report.cols, tl.seed)
                         : tl.queries;
  const GeneratorMatrix generator = make_generator(tl.machine_count, big_l);
  const std::vector<CodedShard> shards = encode(data, generator);
  const std::size_t per_block = data.rows_per_block();

  for (std::size_t i = 0; i < planned.size(); ++i) {
    const ElasticEvent& ev = tl.events[i];
    StepReport step = at_step(ev.t, [&] {
      const FieldVector& w = queries[i];
      if (w.size() != report.cols) {
        fail(ErrorKind::kInvalidArgument,
             "query has " + std::to_string(w.size()) + " entries, expected r=" +
                 std::to_string(report.cols));
      }
      const AssignmentPlan& plan = planned[i].plan;
      const LoadVector& loads = planned[i].optimum.loads;

      auto work = [&](MachineId m) {
        const auto& rows = plan.rows_of(m);
        return compute_partial(shards[static_cast<std::size_t>(m - 1)], w, rows);
      };
      std::vector<PartialResult> partials;
      if (tl.parallel) {
        std::vector<std::future<PartialResult>> pending;
        for (MachineId m : loads.machines) {
          pending.push_back(std::async(std::launch::async, work, m));
        }
        for (auto& f : pending) partials.push_back(f.get());
      } else {
        for (MachineId m : loads.machines) partials.push_back(work(m));
      }
      auto partial_of = [&](MachineId m) -> const PartialResult& {
        auto it = std::lower_bound(loads.machines.begin(), loads.machines.end(), m);
        return partials[static_cast<std::size_t>(it - loads.machines.begin())];
      };

      FieldVector y(report.rows);
      std::vector<bool> filled(report.rows, false);
      for (std::size_t f = 0; f < plan.blocks.size(); ++f) {
        const RowDecoder decoder(generator, plan.blocks[f].machines);
        FieldVector coded(plan.blocks[f].machines.size());
        for (std::size_t row = plan.row_ranges[f].begin;
             row < plan.row_ranges[f].end; ++row) {
          for (std::size_t j = 0; j < coded.size(); ++j) {
            auto v = partial_of(plan.blocks[f].machines[j]).value_at(row);
            HETCEC_CHECK(v.has_value(), "assigned row missing from partial result");
            coded[j] = *v;
          }
          const FieldVector decoded = decoder.decode(coded);
          for (int l = 0; l < big_l; ++l) {
            const std::size_t idx = output_index(l, row, per_block);
            y[idx] = decoded[static_cast<std::size_t>(l)];
            filled[idx] = true;
          }
        }
      }

      StepReport s;
      s.t = ev.t;
      s.loads = loads;
      s.c_star = planned[i].optimum.c_star;
      s.k_star = planned[i].optimum.k_star;
      s.plan = plan;
      s.verified = std::all_of(filled.begin(), filled.end(), [](bool b) { return b; }) &&
                   y == multiply(data.entries(), w);
      s.overlap = overlap_metric(i == 0 ? nullptr : &planned[i - 1].plan, plan);
      s.baseline_time =
          cyclic_baseline(AvailableSet(loads.machines, tl.machine_count), big_l,
                          speeds)
              .time;
      return s;
    });
    report.steps.push_back(std::move(step));
  }
  return report;
}

void write_steps_csv(std::ostream& out, const RunReport& report) {
  out << "t,N_t,c_star_num,c_star_den,F,baseline_num,baseline_den,"
         "overlap_num,overlap_den,verified\n";
  for (const StepReport& s : report.steps) {
    out << s.t << ',' << s.available_count() << ',' << s.c_star.num() << ','
        << s.c_star.den() << ',' << s.block_count() << ','
        << s.baseline_time.num() << ',' << s.baseline_time.den() << ','
        << s.overlap.num() << ',' << s.overlap.den() << ','
        << (s.verified ? "true" : "false") << '\n';
  }
}

}  // namespace hetcec
