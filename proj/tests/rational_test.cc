// Copyright 2026 The Authors.
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

#include "ctn/rational.h"

#include <random>
#include <stdexcept>

#include "gtest/gtest.h"

namespace ctn {
namespace {

TEST(RatTest, CanonicalForm) {
  EXPECT_EQ(Rat(2, 4).ToString(), "1/2");
  EXPECT_EQ(Rat(3, -6).ToString(), "-1/2");
  EXPECT_EQ(Rat(4, 2).ToString(), "2");
  EXPECT_THROW(Rat(1, 0), std::domain_error);
}

TEST(RatTest, ParseRoundTrip) {
  EXPECT_EQ(Rat::Parse("-6/4"), Rat(-3, 2));
  EXPECT_EQ(Rat::Parse("7"), Rat(7));
  EXPECT_EQ(Rat::Parse("+3/9").ToString(), "1/3");
  EXPECT_THROW(Rat::Parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rat::Parse("0.5"), std::invalid_argument);
  EXPECT_THROW(Rat::Parse("/2"), std::invalid_argument);
}

TEST(RatTest, FloorCeil) {
  EXPECT_EQ(Rat(-1, 2).Floor(), -1);
  EXPECT_EQ(Rat(-1, 2).Ceil(), 0);
  EXPECT_EQ(Rat(5).Floor(), 5);
  EXPECT_EQ(Rat(5).Ceil(), 5);
  EXPECT_THROW(Rat(1, 3).ToInt64(), std::domain_error);
}

TEST(RatTest, ArithmeticIsExact) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Rat a(static_cast<std::int64_t>(rng() % 2001) - 1000,
                static_cast<std::int64_t>(rng() % 97) + 1);
    const Rat b(static_cast<std::int64_t>(rng() % 2001) - 1000,
                static_cast<std::int64_t>(rng() % 89) + 1);
    EXPECT_EQ((a + b) - b, a);
    if (!b.IsZero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(ExtRatTest, MinusInfinityOrdersBelowAndAbsorbs) {
  const ExtRat inf = ExtRat::MinusInfinity();
  EXPECT_LT(inf, ExtRat(Rat(-1000000)));
  EXPECT_EQ(inf + ExtRat(5), inf);
  EXPECT_FALSE((ExtRat(5) + inf).IsFinite());
  EXPECT_EQ(ExtRat::Parse("-inf"), inf);
  EXPECT_EQ(ExtRat::Parse("−inf"), inf);
  EXPECT_EQ(inf.ToString(), "-inf");
  EXPECT_THROW(inf.value(), std::domain_error);
  EXPECT_EQ(ExtRat(Rat(1, 2)) + ExtRat(Rat(1, 2)), ExtRat(1));
}

}  // namespace
}  // namespace ctn
