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

#include "ctn/kernels.h"

#include <random>
#include <stdexcept>

#include "gtest/gtest.h"

namespace ctn {
namespace {

// Random partial tables on a small box: many are neither M nor M-natural.
ExchangeTable RandomTable(std::mt19937_64& rng, int dim, int keep_percent) {
  std::vector<std::pair<IntVec, Rat>> entries;
  for (const IntVec& z : BoxPoints(IntVec(dim, 0), IntVec(dim, 2))) {
    if (static_cast<int>(rng() % 100) >= keep_percent) continue;
    entries.emplace_back(z, Rat(static_cast<std::int64_t>(rng() % 7) - 3,
                                static_cast<std::int64_t>(rng() % 2) + 1));
  }
  if (entries.empty()) entries.emplace_back(IntVec(dim, 0), Rat(0));
  return ExchangeTable(std::move(entries));
}

TEST(ExchangeTableTest, SortsAndFinds) {
  ExchangeTable t({{{1, 0}, Rat(2)}, {{0, 1}, Rat(3)}});
  EXPECT_EQ(t.points()[0], (IntVec{0, 1}));
  EXPECT_EQ(t.values()[0], Rat(3));
  EXPECT_EQ(t.Find({1, 0}), std::optional<std::size_t>(1));
  EXPECT_FALSE(t.Find({1, 1}).has_value());
  EXPECT_THROW(ExchangeTable({{{0}, Rat(0)}, {{0}, Rat(1)}}),
               std::invalid_argument);
}

TEST(ExchangeKernelTest, DiagonalPairFailsBothKinds) {
  ExchangeTable t({{{0, 0}, Rat(0)}, {{1, 1}, Rat(0)}});
  for (ExchangeKind kind : {ExchangeKind::kM, ExchangeKind::kMSharp}) {
    const auto v = serial::FirstExchangeViolation(t, kind);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(t.points()[v->x], (IntVec{1, 1}));
    EXPECT_EQ(t.points()[v->y], (IntVec{0, 0}));
    EXPECT_EQ(v->u, 0u);
  }
}

TEST(ExchangeKernelTest, SerialAndParallelAgree) {
  std::mt19937_64 rng(7);
  int violations = 0;
  for (int i = 0; i < 300; ++i) {
    const ExchangeTable t = RandomTable(rng, 2 + i % 2, 40 + i % 60);
    for (ExchangeKind kind : {ExchangeKind::kM, ExchangeKind::kMSharp}) {
      const auto s = serial::FirstExchangeViolation(t, kind);
      const auto p = parallel::FirstExchangeViolation(t, kind);
      EXPECT_EQ(s, p);
      if (s) ++violations;
    }
  }
  EXPECT_GT(violations, 50);
}

TEST(SubmodularityKernelTest, SerialAndParallelAgree) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 6;
    std::vector<std::int64_t> table(std::size_t{1} << n);
    for (std::size_t s = 1; s < table.size(); ++s) {
      table[s] = static_cast<std::int64_t>(rng() % 5);
    }
    EXPECT_EQ(serial::FirstSubmodularityViolation(table, n),
              parallel::FirstSubmodularityViolation(table, n));
  }
}

TEST(SubmodularityKernelTest, SupermodularPair) {
  const std::vector<std::int64_t> table = {0, 0, 0, 1};
  const auto v = serial::FirstSubmodularityViolation(table, 2);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->s, 1u);
  EXPECT_EQ(v->t, 2u);
  const std::vector<std::int64_t> additive = {0, 1, 1, 2};
  EXPECT_FALSE(serial::FirstSubmodularityViolation(additive, 2));
}

TEST(BoxKernelTest, EvaluateAndArgmaxAgree) {
  const IntVec lo{0, -1, 0}, hi{2, 1, 1};
  const PointEvaluator fn = [](const IntVec& z) {
    if (z[0] == 2 && z[1] == -1) return ExtRat::MinusInfinity();
    return ExtRat(Rat(-(z[0] - 1) * (z[0] - 1) + z[1] * z[2]));
  };
  const auto s = serial::EvaluateBox(lo, hi, fn);
  const auto p = parallel::EvaluateBox(lo, hi, fn);
  EXPECT_EQ(s, p);
  EXPECT_EQ(s.size(), 18u);
  const ArgmaxResult a = serial::Argmax(s);
  const ArgmaxResult b = parallel::Argmax(p);
  EXPECT_EQ(a.best, b.best);
  EXPECT_EQ(a.indices, b.indices);
  EXPECT_EQ(a.best, ExtRat(Rat(1)));
}

TEST(BoxKernelTest, ArgmaxOfAllMinusInfinityIsEmpty) {
  const std::vector<ExtRat> v(3, ExtRat::MinusInfinity());
  EXPECT_TRUE(serial::Argmax(v).indices.empty());
  EXPECT_TRUE(parallel::Argmax(v).indices.empty());
}

TEST(BoxKernelTest, ParallelRethrows) {
  const PointEvaluator fn = [](const IntVec& z) -> ExtRat {
    if (z[0] == 3) throw std::runtime_error("boom");
    return ExtRat(Rat(0));
  };
  EXPECT_THROW(parallel::EvaluateBox({0}, {5}, fn), std::runtime_error);
}

}  // namespace
}  // namespace ctn
