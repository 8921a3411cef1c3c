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

#ifndef HETCEC_FIELD_HPP_
#define HETCEC_FIELD_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace hetcec {

// Mersenne prime 2^31 - 1. Products of two residues fit in 64 bits.
inline constexpr std::uint64_t kFieldPrime = 2147483647ULL;

// Residue modulo kFieldPrime.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  explicit constexpr FieldElement(std::uint64_t value)
      : value_(value % kFieldPrime) {}

  // Reduces any signed integer, so -1 maps to p - 1.
  static constexpr FieldElement from_integer(std::int64_t value) {
    std::int64_t r = value % static_cast<std::int64_t>(kFieldPrime);
    if (r < 0) r += static_cast<std::int64_t>(kFieldPrime);
    return FieldElement(static_cast<std::uint64_t>(r));
  }

  constexpr std::uint64_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  FieldElement pow(std::uint64_t exponent) const;
  // Throws Error(kInvalidArgument) for zero.
  FieldElement inverse() const;

  constexpr FieldElement& operator+=(FieldElement o) {
    value_ += o.value_;
    if (value_ >= kFieldPrime) value_ -= kFieldPrime;
    return *this;
  }
  constexpr FieldElement& operator-=(FieldElement o) {
    value_ += kFieldPrime - o.value_;
    if (value_ >= kFieldPrime) value_ -= kFieldPrime;
    return *this;
  }
  constexpr FieldElement& operator*=(FieldElement o) {
    value_ = (value_ * o.value_) % kFieldPrime;
    return *this;
  }

  friend constexpr FieldElement operator+(FieldElement a, FieldElement b) {
    return a += b;
  }
  friend constexpr FieldElement operator-(FieldElement a, FieldElement b) {
    return a -= b;
  }
  friend constexpr FieldElement operator*(FieldElement a, FieldElement b) {
    return a *= b;
  }
  friend constexpr FieldElement operator-(FieldElement a) {
    return FieldElement() - a;
  }
  friend constexpr bool operator==(FieldElement, FieldElement) = default;

 private:
  std::uint64_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, FieldElement e);

using FieldVector = std::vector<FieldElement>;

FieldElement dot(std::span<const FieldElement> a,
                 std::span<const FieldElement> b);

// Dense row-major matrix over the field.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  FieldMatrix(std::size_t rows, std::size_t cols, FieldVector data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  FieldElement at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<FieldElement> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const FieldElement> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::span<const FieldElement> data() const { return data_; }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldVector data_;
};

// Plain matrix-vector product.
FieldVector multiply(const FieldMatrix& m, std::span<const FieldElement> v);

// Inverse of a square matrix by Gauss-Jordan elimination. Throws
// Error(kInvalidArgument) if the matrix is singular or not square.
FieldMatrix invert(const FieldMatrix& m);

}  // namespace hetcec

#endif  // HETCEC_FIELD_HPP_
