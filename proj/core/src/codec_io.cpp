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

#include "hetcec/codec_io.hpp"

#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hetcec/error.hpp"

namespace hetcec {
namespace {

std::vector<std::int64_t> parse_line(std::string_view line, std::size_t lineno) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  auto is_sep = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\r';
  };
  while (pos < line.size()) {
    while (pos < line.size() && is_sep(line[pos])) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !is_sep(line[end])) ++end;
    const char* first = line.data() + pos;
    const char* last = line.data() + end;
    if (*first == '+') ++first;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
      fail(ErrorKind::kInvalidArgument,
           "line " + std::to_string(lineno) + ": bad integer '" +
               std::string(line.substr(pos, end - pos)) + "'");
    }
    out.push_back(v);
    pos = end;
  }
  return out;
}

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> bytes;
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(bytes.data(), bytes.size());
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> bytes;
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (!in) fail(ErrorKind::kInvalidArgument, "truncated shard file");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | bytes[i];
  return v;
}

}  // namespace

FieldMatrix read_integer_matrix(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t cols = 0;
  bool have_header = false;
  FieldVector data;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    auto values = parse_line(line, lineno);
    if (values.empty()) continue;
    if (!have_header) {
      if (values.size() != 1 || values[0] <= 0) {
        fail(ErrorKind::kInvalidArgument,
             "line " + std::to_string(lineno) +
                 ": expected a positive column count");
      }
      cols = static_cast<std::size_t>(values[0]);
      have_header = true;
      continue;
    }
    if (values.size() != cols) {
      fail(ErrorKind::kInvalidArgument,
           "line " + std::to_string(lineno) + ": expected " +
               std::to_string(cols) + " values, found " +
               std::to_string(values.size()));
    }
    for (std::int64_t v : values) data.push_back(FieldElement::from_integer(v));
    ++rows;
  }
  if (!have_header) fail(ErrorKind::kInvalidArgument, "missing column count");
  return FieldMatrix(rows, cols, std::move(data));
}

FieldMatrix read_integer_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorKind::kInvalidArgument, "cannot open " + path.string());
  }
  return read_integer_matrix(in);
}

void write_integer_matrix(std::ostream& out, const FieldMatrix& m) {
  out << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = m.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      out << row[j].value();
    }
    out << '\n';
  }
}

void write_shard(std::ostream& out, const CodedShard& shard) {
  put_u64(out, static_cast<std::uint64_t>(shard.machine_id));
  put_u64(out, shard.matrix.rows());
  put_u64(out, shard.matrix.cols());
  put_u64(out, kFieldPrime);
  for (FieldElement e : shard.matrix.data()) put_u64(out, e.value());
}

CodedShard read_shard(std::istream& in) {
  const std::uint64_t machine = get_u64(in);
  const std::uint64_t rows = get_u64(in);
  const std::uint64_t cols = get_u64(in);
  const std::uint64_t prime = get_u64(in);
  if (prime != kFieldPrime) {
    fail(ErrorKind::kInvalidArgument,
         "shard encoded over p=" + std::to_string(prime) + ", expected " +
             std::to_string(kFieldPrime));
  }
  if (machine == 0 || machine > (1u << 30)) {
    fail(ErrorKind::kInvalidArgument, "bad machine id in shard header");
  }
  if (cols != 0 && rows > (std::uint64_t{1} << 40) / cols) {
    fail(ErrorKind::kInvalidArgument, "shard dimensions too large");
  }
  FieldVector data;
  data.reserve(rows * cols);
  for (std::uint64_t i = 0; i < rows * cols; ++i) {
    const std::uint64_t v = get_u64(in);
    if (v >= kFieldPrime) {
      fail(ErrorKind::kInvalidArgument, "shard residue out of range");
    }
    data.emplace_back(v);
  }
  return CodedShard{static_cast<MachineId>(machine),
                    FieldMatrix(rows, cols, std::move(data))};
}

}  // namespace hetcec
