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

#include <cstddef>
#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "hetcec/field.hpp"
#include "hetcec/mds_codec.hpp"

namespace hetcec {
namespace {

constexpr int kMachines = 8;
constexpr int kSplit = 4;

FieldMatrix random_matrix(std::size_t rows, std::size_t cols) {
  std::mt19937_64 rng(rows * 31 + cols);
  std::uniform_int_distribution<std::uint64_t> dist(0, kFieldPrime - 1);
  FieldMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = FieldElement(dist(rng));
  }
  return m;
}

void BM_Encode(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const DataMatrix data(random_matrix(rows, 64), kSplit);
  const GeneratorMatrix g = make_generator(kMachines, kSplit);
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode(data, g));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(rows) * 64);
}

BENCHMARK(BM_Encode)->RangeMultiplier(4)->Range(64, 4096);

void BM_ComputePartial(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const DataMatrix data(random_matrix(rows, 64), kSplit);
  const GeneratorMatrix g = make_generator(kMachines, kSplit);
  const CodedShard shard = encode_shard(data, g, 1);
  const FieldMatrix w = random_matrix(1, 64);
  std::vector<FieldElement> query(w.row(0).begin(), w.row(0).end());
  std::vector<std::size_t> all(rows / kSplit);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_partial(shard, query, all));
  }
}

BENCHMARK(BM_ComputePartial)->RangeMultiplier(4)->Range(64, 4096);

void BM_DecodeRow(benchmark::State& state) {
  const GeneratorMatrix g = make_generator(kMachines, kSplit);
  const std::vector<MachineId> machines{2, 3, 5, 8};
  const RowDecoder decoder(g, machines);
  const std::vector<FieldElement> coded{FieldElement(11), FieldElement(22), FieldElement(33),
                                        FieldElement(44)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(decoder.decode(coded));
  }
}

BENCHMARK(BM_DecodeRow);

void BM_InvertSubmatrix(benchmark::State& state) {
  const GeneratorMatrix g = make_generator(kMachines, kSplit);
  const std::vector<MachineId> machines{1, 4, 6, 7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(RowDecoder(g, machines));
  }
}

BENCHMARK(BM_InvertSubmatrix);

}  // namespace
}  // namespace hetcec
