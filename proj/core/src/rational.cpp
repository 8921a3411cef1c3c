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

#include "hetcec/rational.hpp"

#include <charconv>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "hetcec/error.hpp"

namespace hetcec {
namespace {

__extension__ typedef __int128 Wide;

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(Wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    fail(ErrorKind::kInvalidArgument,
         "malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

Rational from_wide(Wide num, Wide den) {
  if (den == 0) fail(ErrorKind::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits(num) || !fits(den)) {
    fail(ErrorKind::kInternal, "rational arithmetic overflow");
  }
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) fail(ErrorKind::kInvalidArgument, "zero denominator");
  if (den_ < 0) {
    if (num_ == std::numeric_limits<std::int64_t>::min() ||
        den_ == std::numeric_limits<std::int64_t>::min()) {
      fail(ErrorKind::kInternal, "rational arithmetic overflow");
    }
    num_ = -num_;
    den_ = -den_;
  }
  const Wide g = wide_gcd(num_, den_);
  if (g > 1) {
    num_ = static_cast<std::int64_t>(num_ / g);
    den_ = static_cast<std::int64_t>(den_ / g);
  }
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, text));
  std::int64_t num = parse_int(trim(s.substr(0, slash)), text);
  std::int64_t den = parse_int(trim(s.substr(slash + 1)), text);
  if (den == 0) {
    fail(ErrorKind::kInvalidArgument,
         "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

Rational Rational::reciprocal() const {
  if (num_ == 0) fail(ErrorKind::kInvalidArgument, "reciprocal of zero");
  return from_wide(den_, num_);
}

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& other) {
  *this = from_wide(Wide(num_) * other.den_ + Wide(other.num_) * den_,
                    Wide(den_) * other.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  *this = from_wide(Wide(num_) * other.den_ - Wide(other.num_) * den_,
                    Wide(den_) * other.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  *this = from_wide(Wide(num_) * other.num_, Wide(den_) * other.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.num_ == 0) fail(ErrorKind::kInvalidArgument, "division by zero");
  *this = from_wide(Wide(num_) * other.den_, Wide(den_) * other.num_);
  return *this;
}

Rational Rational::operator-() const { return from_wide(-Wide(num_), den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = Wide(a.num_) * b.den_;
  Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  Wide l = wide_abs(Wide(a) / wide_gcd(a, b) * b);
  if (!fits(l)) fail(ErrorKind::kInternal, "lcm overflow");
  return static_cast<std::int64_t>(l);
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return "invalid_argument";
    case ErrorKind::kInfeasible:
      return "infeasible";
    case ErrorKind::kInternal:
      return "internal";
  }
  return "unknown";
}

}  // namespace hetcec
