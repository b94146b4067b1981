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

#include "ctn/lp.h"

#include <optional>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"

namespace ctn {
namespace {

using ::ctn::oracles::Halfspace;
using ::ctn::oracles::VertexOracleMax;

TEST(LpTest, MaximizeSingleVariable) {
  LinearProgram lp;
  const int x = lp.AddVariable("x", 1);
  lp.AddConstraint({{x, 1}}, Relation::kLessEqual, 1);
  const LpResult r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.optimum, Rat(1));
  EXPECT_EQ(r.primal[0], Rat(1));
  EXPECT_EQ(r.row_multipliers[0], Rat(1));
  EXPECT_EQ(VerifyLpResult(lp, r), "");
}

TEST(LpTest, OpposedPriceGapsAreInfeasibleWithUnitCertificate) {
  LinearProgram lp;
  const int pe = lp.AddFreeVariable("p_e");
  const int pg = lp.AddFreeVariable("p_g");
  lp.AddConstraint({{pe, 1}, {pg, -1}}, Relation::kLessEqual, Rat(-1, 2));
  lp.AddConstraint({{pg, 1}, {pe, -1}}, Relation::kLessEqual, Rat(-1, 2));
  const FeasibilityResult f = CheckFeasible(lp);
  ASSERT_FALSE(f.feasible);
  EXPECT_EQ(f.certificate.row_multipliers, (RatVec{1, 1}));
}

TEST(LpTest, FeasibleIntervalWitnessIsZero) {
  LinearProgram lp;
  const int x = lp.AddFreeVariable("x");
  lp.AddConstraint({{x, 1}}, Relation::kGreaterEqual, 0);
  lp.AddConstraint({{x, 1}}, Relation::kLessEqual, 1);
  const FeasibilityResult f = CheckFeasible(lp);
  ASSERT_TRUE(f.feasible);
  EXPECT_EQ(f.witness, (RatVec{0}));
}

TEST(LpTest, EmptyIntervalIsInfeasible) {
  LinearProgram lp;
  const int x = lp.AddFreeVariable("x");
  lp.AddConstraint({{x, 1}}, Relation::kLessEqual, 0);
  lp.AddConstraint({{x, 1}}, Relation::kGreaterEqual, 1);
  const FeasibilityResult f = CheckFeasible(lp);
  ASSERT_FALSE(f.feasible);
  // 1 * (x <= 0) + (-1) * (x >= 1) reads 0 <= -1.
  EXPECT_EQ(f.certificate.row_multipliers, (RatVec{1, -1}));
}

TEST(LpTest, UnboundedIsReported) {
  LinearProgram lp;
  const int x = lp.AddVariable("x", 1);
  const int y = lp.AddVariable("y", 0);
  lp.AddConstraint({{x, 1}, {y, -1}}, Relation::kLessEqual, 2);
  EXPECT_EQ(SolveLp(lp).status, LpStatus::kUnbounded);
}

TEST(LpTest, BoundsCarryMultipliers) {
  // min x + y  s.t.  x + y >= 1, 0 <= x <= 3, 2 <= y.
  LinearProgram lp;
  lp.sense = Sense::kMinimize;
  const int x = lp.AddVariable("x", 1, Rat(0), Rat(3));
  const int y = lp.AddVariable("y", 1, Rat(2));
  lp.AddConstraint({{x, 1}, {y, 1}}, Relation::kGreaterEqual, 1);
  const LpResult r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.optimum, Rat(2));
  EXPECT_EQ(r.primal, (RatVec{0, 2}));
  EXPECT_EQ(r.lower_bound_multipliers, (RatVec{1, 1}));
  EXPECT_EQ(VerifyLpResult(lp, r), "");
}

TEST(LpTest, UpperBoundInfeasibilityUsesBoundMultipliers) {
  LinearProgram lp;
  const int x = lp.AddVariable("x", 0, Rat(0), Rat(1));
  lp.AddConstraint({{x, 1}}, Relation::kGreaterEqual, 2);
  const FeasibilityResult f = CheckFeasible(lp);
  ASSERT_FALSE(f.feasible);
  EXPECT_EQ(f.certificate.row_multipliers, (RatVec{-1}));
  EXPECT_EQ(f.certificate.upper_bound_multipliers, (RatVec{1}));
}

TEST(LpTest, BealeCyclingExampleTerminates) {
  LinearProgram lp;
  lp.sense = Sense::kMinimize;
  const int x4 = lp.AddVariable("x4", Rat(-3, 4));
  const int x5 = lp.AddVariable("x5", 20);
  const int x6 = lp.AddVariable("x6", Rat(-1, 2));
  const int x7 = lp.AddVariable("x7", 6);
  lp.AddConstraint({{x4, Rat(1, 4)}, {x5, -8}, {x6, -1}, {x7, 9}},
                   Relation::kLessEqual, 0);
  lp.AddConstraint({{x4, Rat(1, 2)}, {x5, -12}, {x6, Rat(-1, 2)}, {x7, 3}},
                   Relation::kLessEqual, 0);
  lp.AddConstraint({{x6, 1}}, Relation::kLessEqual, 1);
  const LpResult r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.optimum, Rat(-5, 4));
}

TEST(LpTest, EqualityAndRedundantRows) {
  // x + y = 2 stated twice; max x with x <= 3/2.
  LinearProgram lp;
  const int x = lp.AddVariable("x", 1);
  const int y = lp.AddVariable("y", 0);
  lp.AddConstraint({{x, 1}, {y, 1}}, Relation::kEqual, 2);
  lp.AddConstraint({{x, 2}, {y, 2}}, Relation::kEqual, 4);
  lp.AddConstraint({{x, 1}}, Relation::kLessEqual, Rat(3, 2));
  const LpResult r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.optimum, Rat(3, 2));
  EXPECT_EQ(r.primal, (RatVec{Rat(3, 2), Rat(1, 2)}));
}

TEST(LpTest, DumpMirrorsFields) {
  LinearProgram lp;
  const int x = lp.AddVariable("x", 2);
  const int p = lp.AddFreeVariable("p");
  lp.AddConstraint({{x, 1}, {p, Rat(-1, 3)}}, Relation::kGreaterEqual, 1,
                   "row");
  const std::string dump = lp.Dump();
  EXPECT_NE(dump.find("maximize"), std::string::npos);
  EXPECT_NE(dump.find("row: + 1 x + -1/3 p >= 1"), std::string::npos);
  EXPECT_NE(dump.find("p free"), std::string::npos);
  EXPECT_NE(dump.find("0 <= x"), std::string::npos);
}

// Random bounded programs against the vertex oracle; also checks that the
// witness satisfies every constraint and that re-solving is deterministic.
TEST(LpPropertyTest, MatchesVertexOracleOnRandomBoundedPrograms) {
  std::mt19937_64 rng(20260101);
  auto draw = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
  };
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = draw(1, 3);
    const int rows = draw(1, 4);
    LinearProgram lp;
    lp.sense = draw(0, 1) ? Sense::kMaximize : Sense::kMinimize;
    std::vector<mpq_class> c(n);
    std::vector<Halfspace> hs;
    for (int j = 0; j < n; ++j) {
      c[j] = mpq_class(draw(-4, 4), draw(1, 3));
      lp.AddVariable("x" + std::to_string(j), Rat(c[j]), Rat(-3), Rat(3));
      std::vector<mpq_class> e(n, 0);
      e[j] = 1;
      hs.push_back({e, 3});
      e[j] = -1;
      hs.push_back({e, 3});
    }
    for (int r = 0; r < rows; ++r) {
      std::vector<mpq_class> a(n);
      std::vector<LpTerm> terms;
      for (int j = 0; j < n; ++j) {
        a[j] = draw(-3, 3);
        terms.push_back({j, Rat(a[j])});
      }
      const mpq_class b(draw(-5, 5), draw(1, 2));
      const int rel = draw(0, 2);
      if (rel == 0) {
        lp.AddConstraint(terms, Relation::kLessEqual, Rat(b));
        hs.push_back({a, b});
      } else {
        lp.AddConstraint(terms, Relation::kGreaterEqual, Rat(b));
        std::vector<mpq_class> neg(n);
        for (int j = 0; j < n; ++j) neg[j] = -a[j];
        hs.push_back({neg, -b});
      }
    }
    std::vector<mpq_class> oc = c;
    if (lp.sense == Sense::kMinimize) {
      for (auto& v : oc) v = -v;
    }
    const auto oracle = VertexOracleMax(hs, oc);
    const LpResult r = SolveLp(lp);
    ASSERT_EQ(VerifyLpResult(lp, r), "");
    if (!oracle) {
      EXPECT_EQ(r.status, LpStatus::kInfeasible) << lp.Dump();
      ++infeasible;
      continue;
    }
    ASSERT_EQ(r.status, LpStatus::kOptimal) << lp.Dump();
    const mpq_class expected =
        lp.sense == Sense::kMinimize ? mpq_class(-*oracle) : *oracle;
    EXPECT_EQ(r.optimum, Rat(expected)) << lp.Dump();
    ++optimal;
    const LpResult again = SolveLp(lp);
    EXPECT_EQ(again.primal, r.primal);
    EXPECT_EQ(again.row_multipliers, r.row_multipliers);
  }
  EXPECT_GT(optimal, 20);
  EXPECT_GT(infeasible, 5);
}

}  // namespace
}  // namespace ctn
