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

#include <cstdint>
#include <limits>
#include <sstream>

#include "gtest/gtest.h"
#include "hetcec/error.hpp"

namespace hetcec {
namespace {

TEST(RationalTest, NormalizesSignAndLowestTerms) {
  Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(0, -7), Rational(0));
  EXPECT_EQ(Rational(0, 5).den(), 1);
}

TEST(RationalTest, Arithmetic) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
  EXPECT_EQ(Rational(2, 7) * Rational(7, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, 5) / Rational(9, 10), Rational(2, 3));
  EXPECT_EQ(-Rational(2, 5), Rational(-2, 5));
  EXPECT_EQ(Rational(5, 3).reciprocal(), Rational(3, 5));
}

TEST(RationalTest, Ordering) {
  EXPECT_LT(Rational(1, 6), Rational(1, 5));
  EXPECT_GT(Rational(-1, 6), Rational(-1, 5));
  EXPECT_LE(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(std::max(Rational(2, 7), Rational(1, 4)), Rational(2, 7));
}

TEST(RationalTest, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse(" 4/6 "), Rational(2, 3));
  EXPECT_EQ(Rational::parse("-1/2"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("+5"), Rational(5));
  EXPECT_EQ(Rational(3).to_string(), "3/1");
  EXPECT_EQ(Rational(2, 5).to_string(), "2/5");
  std::ostringstream os;
  os << Rational(-7, 21);
  EXPECT_EQ(os.str(), "-1/3");
}

TEST(RationalTest, ParseRejectsGarbage) {
  EXPECT_THROW(Rational::parse(""), Error);
  EXPECT_THROW(Rational::parse("1/"), Error);
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("1.5"), Error);
  EXPECT_THROW(Rational::parse("a/b"), Error);
}

TEST(RationalTest, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1, 0), Error);
  EXPECT_THROW(Rational(1) / Rational(0), Error);
  EXPECT_THROW(Rational(0).reciprocal(), Error);
}

TEST(RationalTest, OverflowIsReportedNotWrapped) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  try {
    (void)(Rational(big) * Rational(2));
    FAIL() << "expected overflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInternal);
  }
  // Large intermediates that reduce back into range are fine.
  EXPECT_EQ(Rational(big, 3) * Rational(3, big), Rational(1));
}

TEST(RationalTest, CheckedLcm) {
  EXPECT_EQ(checked_lcm(4, 6), 12);
  EXPECT_EQ(checked_lcm(3, 5), 15);
  EXPECT_EQ(checked_lcm(7, 7), 7);
  EXPECT_THROW(checked_lcm(std::numeric_limits<std::int64_t>::max(), 2), Error);
}

}  // namespace
}  // namespace hetcec
