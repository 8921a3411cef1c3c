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

#include <cstdint>
#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "hetcec/assignment.hpp"
#include "hetcec/load_optimizer.hpp"
#include "hetcec/rational.hpp"

namespace hetcec {
namespace {

struct Fixture {
  SpeedVector speeds;
  AvailableSet available;
};

Fixture make_fixture(int machines) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(machines));
  std::uniform_int_distribution<int> speed(1, 20);
  std::vector<Rational> s;
  std::vector<MachineId> ids;
  for (int i = 1; i <= machines; ++i) {
    s.emplace_back(speed(rng));
    ids.push_back(i);
  }
  return {SpeedVector(s), AvailableSet(ids, machines)};
}

void BM_OptimalLoad(benchmark::State& state) {
  const int machines = static_cast<int>(state.range(0));
  const Fixture f = make_fixture(machines);
  const int split = machines / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_load(f.speeds, f.available, split));
  }
}

BENCHMARK(BM_OptimalLoad)->RangeMultiplier(2)->Range(4, 32);

void BM_OracleLoad(benchmark::State& state) {
  const int machines = static_cast<int>(state.range(0));
  const Fixture f = make_fixture(machines);
  const int split = machines / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_load(f.speeds, f.available, split));
  }
}

BENCHMARK(BM_OracleLoad)->RangeMultiplier(2)->Range(4, 32);

void BM_FillAssignment(benchmark::State& state) {
  const int machines = static_cast<int>(state.range(0));
  const Fixture f = make_fixture(machines);
  const int split = machines / 2;
  const LoadVector loads = optimal_load(f.speeds, f.available, split).loads;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fill_assignment(loads, split));
  }
}

BENCHMARK(BM_FillAssignment)->RangeMultiplier(2)->Range(4, 32);

}  // namespace
}  // namespace hetcec
