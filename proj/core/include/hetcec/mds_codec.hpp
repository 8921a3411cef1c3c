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

#ifndef HETCEC_MDS_CODEC_HPP_
#define HETCEC_MDS_CODEC_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hetcec/field.hpp"

namespace hetcec {

// Machines are numbered 1..N throughout the library.
using MachineId = int;

// N x L Vandermonde generator: row n is [a_n^0, ..., a_n^(L-1)] with
// a_n = n. The points are distinct and nonzero in the field, so any L rows
// form an invertible matrix.
class GeneratorMatrix {
 public:
  int machine_count() const { return static_cast<int>(points_.size()); }
  int split_factor() const { return split_factor_; }

  FieldElement point(MachineId machine) const;
  std::span<const FieldElement> row(MachineId machine) const;
  FieldElement coefficient(MachineId machine, int block) const {
    return row(machine)[static_cast<std::size_t>(block)];
  }

  // L x L matrix made of the rows of the given machines, in order.
  FieldMatrix submatrix(std::span<const MachineId> machines) const;

 private:
  friend GeneratorMatrix make_generator(int machine_count, int split_factor);

  int split_factor_ = 0;
  FieldVector points_;
  FieldMatrix rows_;
};

// Throws Error(kInvalidArgument) unless 1 <= L <= N < p.
GeneratorMatrix make_generator(int machine_count, int split_factor);

// q x r data matrix split row-wise into L blocks of q/L rows each.
class DataMatrix {
 public:
  // Throws Error(kInvalidArgument) unless q is a positive multiple of L.
  DataMatrix(FieldMatrix entries, int split_factor);

  std::size_t rows() const { return entries_.rows(); }
  std::size_t cols() const { return entries_.cols(); }
  int split_factor() const { return split_factor_; }
  std::size_t rows_per_block() const { return rows() / split_factor_; }

  const FieldMatrix& entries() const { return entries_; }
  // Row i of block X_l, with l in [0, L).
  std::span<const FieldElement> block_row(int block, std::size_t i) const {
    return entries_.row(static_cast<std::size_t>(block) * rows_per_block() + i);
  }

 private:
  FieldMatrix entries_;
  int split_factor_;
};

struct CodedShard {
  MachineId machine_id = 0;
  FieldMatrix matrix;  // (q/L) x r
};

// Inner products of a subset of shard rows with a query vector.
struct PartialResult {
  MachineId machine_id = 0;
  std::vector<std::size_t> row_indices;  // strictly increasing
  FieldVector values;

  std::optional<FieldElement> value_at(std::size_t row) const;
};

// Shard n = sum_l g_{n,l} X_l for every machine n = 1..N.
std::vector<CodedShard> encode(const DataMatrix& data,
                               const GeneratorMatrix& generator);

CodedShard encode_shard(const DataMatrix& data,
                        const GeneratorMatrix& generator, MachineId machine);

// Rows are 0-based indices into the shard; they are sorted and must be
// unique and < q/L.
PartialResult compute_partial(const CodedShard& shard,
                              std::span<const FieldElement> query,
                              std::span<const std::size_t> rows);

// Inverts the generator submatrix of L distinct machines once, then decodes
// any number of rows whose partial results come from exactly those machines.
class RowDecoder {
 public:
  RowDecoder(const GeneratorMatrix& generator,
             std::span<const MachineId> machines);

  std::span<const MachineId> machines() const { return machines_; }

  // coded[j] is the value reported by machines()[j]. Returns
  // [X_1^(i) w, ..., X_L^(i) w].
  FieldVector decode(std::span<const FieldElement> coded) const;

 private:
  std::vector<MachineId> machines_;
  FieldMatrix inverse_;
};

// Recovers [X_l^(i) w]_{l=1..L} for one coded row i from L partial results
// of distinct machines. Throws Error(kInvalidArgument) on duplicate machines,
// a wrong result count or a result missing row i.
FieldVector decode_row(std::span<const PartialResult> results, std::size_t row,
                       const GeneratorMatrix& generator);

// Position of X_l^(i) w inside y = X w.
inline std::size_t output_index(int block, std::size_t row,
                                std::size_t rows_per_block) {
  return static_cast<std::size_t>(block) * rows_per_block + row;
}

}  // namespace hetcec

#endif  // HETCEC_MDS_CODEC_HPP_
