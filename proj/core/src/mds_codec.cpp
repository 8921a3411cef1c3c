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

#include "hetcec/mds_codec.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hetcec/error.hpp"

namespace hetcec {
namespace {

std::string machine_str(MachineId m) { return "machine " + std::to_string(m); }

}  // namespace

FieldElement GeneratorMatrix::point(MachineId machine) const {
  if (machine < 1 || machine > machine_count()) {
    fail(ErrorKind::kInvalidArgument, "no generator row for " + machine_str(machine));
  }
  return points_[static_cast<std::size_t>(machine - 1)];
}

std::span<const FieldElement> GeneratorMatrix::row(MachineId machine) const {
  if (machine < 1 || machine > machine_count()) {
    fail(ErrorKind::kInvalidArgument, "no generator row for " + machine_str(machine));
  }
  return rows_.row(static_cast<std::size_t>(machine - 1));
}

FieldMatrix GeneratorMatrix::submatrix(
    std::span<const MachineId> machines) const {
  FieldMatrix sub(machines.size(), static_cast<std::size_t>(split_factor_));
  for (std::size_t i = 0; i < machines.size(); ++i) {
    auto src = row(machines[i]);
    std::copy(src.begin(), src.end(), sub.row(i).begin());
  }
  return sub;
}

GeneratorMatrix make_generator(int machine_count, int split_factor) {
  if (split_factor < 1 || machine_count < 1) {
    fail(ErrorKind::kInvalidArgument, "N and L must be positive");
  }
  if (split_factor > machine_count) {
    fail(ErrorKind::kInvalidArgument,
         "split factor L=" + std::to_string(split_factor) +
             " exceeds machine count N=" + std::to_string(machine_count));
  }
  if (static_cast<std::uint64_t>(machine_count) >= kFieldPrime) {
    fail(ErrorKind::kInvalidArgument, "machine count must be below the field prime");
  }
  GeneratorMatrix g;
  g.split_factor_ = split_factor;
  g.rows_ = FieldMatrix(static_cast<std::size_t>(machine_count),
                        static_cast<std::size_t>(split_factor));
  for (int n = 1; n <= machine_count; ++n) {
    const FieldElement a(static_cast<std::uint64_t>(n));
    g.points_.push_back(a);
    FieldElement power(1);
    for (int l = 0; l < split_factor; ++l) {
      g.rows_.at(n - 1, l) = power;
      power *= a;
    }
  }
  return g;
}

DataMatrix::DataMatrix(FieldMatrix entries, int split_factor)
    : entries_(std::move(entries)), split_factor_(split_factor) {
  if (split_factor_ < 1) {
    fail(ErrorKind::kInvalidArgument, "split factor must be positive");
  }
  if (entries_.rows() == 0 ||
      entries_.rows() % static_cast<std::size_t>(split_factor_) != 0) {
    fail(ErrorKind::kInvalidArgument,
         "row count q=" + std::to_string(entries_.rows()) +
             " is not a positive multiple of L=" + std::to_string(split_factor_));
  }
}

std::optional<FieldElement> PartialResult::value_at(std::size_t row) const {
  auto it = std::lower_bound(row_indices.begin(), row_indices.end(), row);
  if (it == row_indices.end() || *it != row) return std::nullopt;
  return values[static_cast<std::size_t>(it - row_indices.begin())];
}

CodedShard encode_shard(const DataMatrix& data,
                        const GeneratorMatrix& generator, MachineId machine) {
  if (generator.split_factor() != data.split_factor()) {
    fail(ErrorKind::kInvalidArgument,
         "generator has L=" + std::to_string(generator.split_factor()) +
             " but data is split into " + std::to_string(data.split_factor()));
  }
  const std::size_t rows = data.rows_per_block();
  CodedShard shard{machine, FieldMatrix(rows, data.cols())};
  auto coeffs = generator.row(machine);
  for (int l = 0; l < data.split_factor(); ++l) {
    const FieldElement g = coeffs[static_cast<std::size_t>(l)];
    for (std::size_t i = 0; i < rows; ++i) {
      auto src = data.block_row(l, i);
      auto dst = shard.matrix.row(i);
      for (std::size_t j = 0; j < src.size(); ++j) dst[j] += g * src[j];
    }
  }
  return shard;
}

std::vector<CodedShard> encode(const DataMatrix& data,
                               const GeneratorMatrix& generator) {
  std::vector<CodedShard> shards;
  shards.reserve(static_cast<std::size_t>(generator.machine_count()));
  for (MachineId n = 1; n <= generator.machine_count(); ++n) {
    shards.push_back(encode_shard(data, generator, n));
  }
  return shards;
}

PartialResult compute_partial(const CodedShard& shard,
                              std::span<const FieldElement> query,
                              std::span<const std::size_t> rows) {
  if (query.size() != shard.matrix.cols()) {
    fail(ErrorKind::kInvalidArgument,
         "query has " + std::to_string(query.size()) + " entries, shard has " +
             std::to_string(shard.matrix.cols()) + " columns");
  }
  PartialResult result;
  result.machine_id = shard.machine_id;
  result.row_indices.assign(rows.begin(), rows.end());
  std::sort(result.row_indices.begin(), result.row_indices.end());
  if (std::adjacent_find(result.row_indices.begin(),
                         result.row_indices.end()) != result.row_indices.end()) {
    fail(ErrorKind::kInvalidArgument, "duplicate row index");
  }
  if (!result.row_indices.empty() &&
      result.row_indices.back() >= shard.matrix.rows()) {
    fail(ErrorKind::kInvalidArgument,
         "row index " + std::to_string(result.row_indices.back()) +
             " out of range for shard with " +
             std::to_string(shard.matrix.rows()) + " rows");
  }
  result.values.reserve(result.row_indices.size());
  for (std::size_t i : result.row_indices) {
    result.values.push_back(dot(shard.matrix.row(i), query));
  }
  return result;
}

RowDecoder::RowDecoder(const GeneratorMatrix& generator,
                       std::span<const MachineId> machines)
    : machines_(machines.begin(), machines.end()) {
  if (machines_.size() != static_cast<std::size_t>(generator.split_factor())) {
    fail(ErrorKind::kInvalidArgument,
         "decoding needs exactly L=" + std::to_string(generator.split_factor()) +
             " machines, got " + std::to_string(machines_.size()));
  }
  std::vector<MachineId> sorted = machines_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorKind::kInvalidArgument, "duplicate machine in decoding set");
  }
  try {
    inverse_ = invert(generator.submatrix(machines_));
  } catch (const Error& e) {
    // Distinct Vandermonde points cannot give a singular submatrix.
    fail(ErrorKind::kInternal,
         std::string("generator submatrix not invertible: ") + e.what());
  }
}

FieldVector RowDecoder::decode(std::span<const FieldElement> coded) const {
  if (coded.size() != machines_.size()) {
    fail(ErrorKind::kInvalidArgument, "coded value count does not match L");
  }
  return multiply(inverse_, coded);
}

FieldVector decode_row(std::span<const PartialResult> results, std::size_t row,
                       const GeneratorMatrix& generator) {
  std::vector<MachineId> machines;
  FieldVector coded;
  machines.reserve(results.size());
  coded.reserve(results.size());
  for (const PartialResult& r : results) {
    auto v = r.value_at(row);
    if (!v) {
      fail(ErrorKind::kInvalidArgument,
           machine_str(r.machine_id) + " did not compute row " +
               std::to_string(row));
    }
    machines.push_back(r.machine_id);
    coded.push_back(*v);
  }
  return RowDecoder(generator, machines).decode(coded);
}

}  // namespace hetcec
