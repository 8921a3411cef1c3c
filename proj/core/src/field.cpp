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

#include "hetcec/field.hpp"

#include <ostream>
#include <string>
#include <utility>

#include "hetcec/error.hpp"

namespace hetcec {

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  FieldElement base = *this;
  FieldElement result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorKind::kInvalidArgument, "inverse of zero");
  return pow(kFieldPrime - 2);
}

std::ostream& operator<<(std::ostream& os, FieldElement e) {
  return os << e.value();
}

FieldElement dot(std::span<const FieldElement> a,
                 std::span<const FieldElement> b) {
  if (a.size() != b.size()) {
    fail(ErrorKind::kInvalidArgument,
         "dot product length mismatch: " + std::to_string(a.size()) + " vs " +
             std::to_string(b.size()));
  }
  // Each product is below 2^62, so three fit on top of a reduced residue.
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += a[i].value() * b[i].value();
    if (i % 3 == 2) acc %= kFieldPrime;
  }
  return FieldElement(acc % kFieldPrime);
}

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, FieldVector data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    fail(ErrorKind::kInvalidArgument, "matrix data size does not match shape");
  }
}

FieldVector multiply(const FieldMatrix& m, std::span<const FieldElement> v) {
  FieldVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = dot(m.row(i), v);
  return out;
}

FieldMatrix invert(const FieldMatrix& m) {
  if (m.rows() != m.cols()) {
    fail(ErrorKind::kInvalidArgument, "cannot invert a non-square matrix");
  }
  const std::size_t n = m.rows();
  FieldMatrix a = m;
  FieldMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv.at(i, i) = FieldElement(1);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) fail(ErrorKind::kInvalidArgument, "singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const FieldElement scale = a.at(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      const FieldElement factor = a.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= factor * a.at(col, j);
        inv.at(i, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace hetcec
