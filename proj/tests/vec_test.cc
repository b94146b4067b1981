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

#include "ctn/vec.h"

#include <random>
#include <set>
#include <stdexcept>

#include "gtest/gtest.h"

namespace ctn {
namespace {

using Support = std::vector<std::size_t>;

TEST(SupportTest, PositiveAndNegative) {
  EXPECT_EQ(PositiveSupport(IntVec{1, -1}), (Support{0}));
  EXPECT_EQ(NegativeSupport(IntVec{1, -1}), (Support{1}));
  EXPECT_TRUE(PositiveSupport(IntVec{0, 0}).empty());
  EXPECT_TRUE(NegativeSupport(IntVec{0, 0}).empty());
  EXPECT_EQ(NegativeSupport(IntVec{-2, 3}), (Support{0}));
  EXPECT_EQ(PositiveSupport(IntVec{1, 1} - IntVec{0, 0}), (Support{0, 1}));
}

TEST(SupportTest, SupportsAreDisjoint) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    IntVec v(5);
    for (auto& c : v) c = static_cast<std::int64_t>(rng() % 7) - 3;
    const Support p = PositiveSupport(v), n = NegativeSupport(v);
    std::set<std::size_t> all(p.begin(), p.end());
    for (std::size_t k : n) EXPECT_FALSE(all.contains(k));
  }
}

TEST(UnitVectorTest, NamedCoordinates) {
  const IndexSet idx({"e", "g"});
  EXPECT_EQ(UnitVector(idx, "e"), (IntVec{1, 0}));
  EXPECT_EQ(UnitVector(idx, "g"), (IntVec{0, 1}));
  EXPECT_EQ(IntVec({1, 0}) - UnitVector(idx, "e") + UnitVector(idx, "g"),
            (IntVec{0, 1}));
  EXPECT_THROW(UnitVector(idx, "h"), std::out_of_range);
  EXPECT_THROW(IndexSet({"e", "e"}), std::invalid_argument);
}

TEST(HypercubeTest, Corners) {
  EXPECT_EQ(HypercubeCorners(RatVec{Rat(1, 2), Rat(1, 2)}),
            (std::vector<IntVec>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(HypercubeCorners(RatVec{1, 0}), (std::vector<IntVec>{{1, 0}}));
  EXPECT_EQ(HypercubeCorners(RatVec{1, Rat(1, 2)}),
            (std::vector<IntVec>{{1, 0}, {1, 1}}));
  EXPECT_EQ(HypercubeCorners(RatVec{Rat(-1, 3)}),
            (std::vector<IntVec>{{-1}, {0}}));
}

TEST(HypercubeTest, CornerCountIsTwoToFractionalCount) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    RatVec x;
    int fractional = 0;
    for (int k = 0; k < 4; ++k) {
      Rat r(static_cast<std::int64_t>(rng() % 13) - 6,
            static_cast<std::int64_t>(rng() % 3) + 1);
      if (!r.IsInteger()) ++fractional;
      x.push_back(r);
    }
    EXPECT_EQ(HypercubeCorners(x).size(), std::size_t{1} << fractional);
  }
}

TEST(ParseRatVecTest, Forms) {
  EXPECT_EQ(ParseRatVec("(1/2, 0,-3)"), (RatVec{Rat(1, 2), 0, -3}));
  EXPECT_EQ(ParseRatVec("4"), (RatVec{4}));
  EXPECT_THROW(ParseRatVec("1,,2"), std::invalid_argument);
}

}  // namespace
}  // namespace ctn
