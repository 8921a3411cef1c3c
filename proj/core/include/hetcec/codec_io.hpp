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

#ifndef HETCEC_CODEC_IO_HPP_
#define HETCEC_CODEC_IO_HPP_

#include <filesystem>
#include <iosfwd>

#include "hetcec/field.hpp"
#include "hetcec/mds_codec.hpp"

namespace hetcec {

// Integer matrix text format:
//
//   3
//   1, 2, 3
//   -4 5 6
//
// The first non-blank line is the column count. Every following non-blank
// line is one row of exactly that many integers separated by commas and/or
// whitespace. Lines starting with '#' are comments. Integers are reduced
// modulo the field prime.
FieldMatrix read_integer_matrix(std::istream& in);
FieldMatrix read_integer_matrix_file(const std::filesystem::path& path);
void write_integer_matrix(std::ostream& out, const FieldMatrix& m);

// Shard binary layout, all fields little-endian uint64:
//   machine_id, rows (q/L), cols (r), prime, then rows*cols residues
//   in row-major order.
void write_shard(std::ostream& out, const CodedShard& shard);
CodedShard read_shard(std::istream& in);

}  // namespace hetcec

#endif  // HETCEC_CODEC_IO_HPP_
