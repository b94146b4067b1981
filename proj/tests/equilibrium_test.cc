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

#include "ctn/equilibrium.h"

#include "ctn/builtin.h"
#include "ctn/errors.h"
#include "gtest/gtest.h"

namespace ctn {
namespace {

PriceSystem ArcOnly(RatVec p) {
  PriceSystem ps;
  ps.p = std::move(p);
  return ps;
}

// Multiplier on the named row of an infeasible search.
Rat RowWeight(const PriceSearch& s, const std::string& name) {
  for (int r = 0; r < s.program.num_constraints(); ++r) {
    if (s.program.constraints()[r].name == name) {
      return s.certificate.row_multipliers[r];
    }
  }
  ADD_FAILURE() << "no row " << name;
  return Rat(0);
}

TEST(VerifyTest, SwapWithoutConstraint) {
  const EAInstance inst = BuiltinSwapInstance(false);
  const CEReport r = VerifyCompetitiveEquilibrium(inst, {1, 1}, ArcOnly({0, 0}));
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(r.agents[0].demand.bundles, PointSet({{1, -1}}));
  EXPECT_EQ(r.agents[1].demand.bundles, PointSet({{-1, 1}}));
}

TEST(VerifyTest, SwapWithConstraint) {
  const EAInstance inst = BuiltinSwapInstance(true);
  const CEReport r = VerifyCompetitiveEquilibrium(inst, {0, 0}, ArcOnly({0, 0}));
  EXPECT_FALSE(r.verdict);
  EXPECT_FALSE(r.agents[0].in_demand);
  EXPECT_EQ(r.agents[0].demand.bundles, PointSet({{1, -1}}));
  EXPECT_THROW(VerifyCompetitiveEquilibrium(inst, {1, 1}, ArcOnly({0, 0})),
               InfeasibleOutcomeError);
}

TEST(VerifyTest, NoArcs) {
  TradeGraph g({"a"}, {});
  const EAInstance inst(
      Economy(g, {FiniteIntFunction(IndexSet(), {{{}, Rat(1)}})}),
      std::nullopt);
  EXPECT_TRUE(VerifyCompetitiveEquilibrium(inst, {}, ArcOnly({})).verdict);
}

TEST(VerifyTest, RentsNeedSlackness) {
  const EAInstance inst = BuiltinTwoSidedInstance();
  PriceSystem ps = ArcOnly({3, 2});
  ps.notion = PriceNotion::kConstraintRents;
  ps.rents = {{3u, Rat(2)}};
  const CEReport ok = VerifyCompetitiveEquilibrium(inst, {1, 0}, ps);
  EXPECT_TRUE(ok.verdict);
  EXPECT_EQ(EffectivePrices(inst.graph(), 0, ps), (RatVec{1, 0}));
  EXPECT_EQ(EffectivePrices(inst.graph(), 1, ps), (RatVec{3, 2}));
  ps.rents = {{2u, Rat(1)}};  // {g} is slack at (1, 0)
  EXPECT_FALSE(VerifyCompetitiveEquilibrium(inst, {1, 0}, ps)
                   .complementary_slackness);
  ps.rents = {{3u, Rat(-1)}};
  EXPECT_FALSE(
      VerifyCompetitiveEquilibrium(inst, {1, 0}, ps).rents_nonnegative);
}

TEST(ArcPriceTest, Found) {
  const EAInstance inst = BuiltinSwapInstance(false);
  const PriceSearch s = FindArcPrices(inst, {1, 1});
  ASSERT_TRUE(s.found);
  EXPECT_TRUE(VerifyCompetitiveEquilibrium(inst, {1, 1}, s.prices).verdict);
}

TEST(ArcPriceTest, SwapAtZeroIsRefuted) {
  const EAInstance inst = BuiltinSwapInstance(true);
  const PriceSearch s = FindArcPrices(inst, {0, 0});
  ASSERT_FALSE(s.found);
  EXPECT_EQ(VerifyLpResult(s.program, s.certificate), "");
  // Both swap deviations must carry weight: they are the only pair whose
  // left-hand sides cancel.
  EXPECT_GT(RowWeight(s, "N1:(1,-1)"), Rat(0));
  EXPECT_GT(RowWeight(s, "N2:(-1,1)"), Rat(0));
}

TEST(RentTest, TwoSidedInstance) {
  const EAInstance inst = BuiltinTwoSidedInstance();
  const PriceSearch s = FindPricesWithRents(inst, {1, 0});
  ASSERT_TRUE(s.found);
  EXPECT_EQ(s.prices.notion, PriceNotion::kConstraintRents);
  EXPECT_TRUE(VerifyCompetitiveEquilibrium(inst, {1, 0}, s.prices).verdict);
  // Columns: p_e, p_g, then rents on the sets tight at (1, 0).
  EXPECT_EQ(s.program.num_variables(), 4);
}

TEST(RentTest, SwapIsRefuted) {
  const EAInstance inst = BuiltinSwapInstance(true);
  for (const IntVec& x : {IntVec{0, 0}, IntVec{1, 0}, IntVec{0, 1}}) {
    const PriceSearch s = FindPricesWithRents(inst, x);
    EXPECT_FALSE(s.found) << Format(x);
    EXPECT_EQ(VerifyLpResult(s.program, s.certificate), "");
  }
  // Every constraint is slack at (0, 0): no rent columns.
  EXPECT_EQ(FindPricesWithRents(inst, {0, 0}).program.num_variables(), 2);
  EXPECT_THROW(FindPricesWithRents(BuiltinSwapInstance(false), {1, 1}),
               PreconditionError);
}

TEST(CertifyTest, SwapHasNoEquilibrium) {
  const NonexistenceResult r = CertifyNonexistence(BuiltinSwapInstance(true));
  EXPECT_FALSE(r.exists);
  ASSERT_EQ(r.searches.size(), 3u);
  EXPECT_EQ(r.searches[0].outcome, (IntVec{0, 0}));
  EXPECT_EQ(r.searches[1].outcome, (IntVec{0, 1}));
  EXPECT_EQ(r.searches[2].outcome, (IntVec{1, 0}));
  for (const OutcomeRefutation& o : r.searches) {
    EXPECT_FALSE(o.arc_prices.found);
    ASSERT_TRUE(o.rents.has_value());
    EXPECT_FALSE(o.rents->found);
  }
  EXPECT_EQ(VerifyCertificates(r), "");
}

TEST(CertifyTest, TwoSidedHasEquilibrium) {
  const EAInstance inst = BuiltinTwoSidedInstance();
  const NonexistenceResult r = CertifyNonexistence(inst);
  ASSERT_TRUE(r.exists);
  EXPECT_EQ(r.outcome, (IntVec{1, 0}));
  EXPECT_TRUE(VerifyCompetitiveEquilibrium(inst, r.outcome, r.prices).verdict);
  const WelfareCheck w = CheckFirstWelfare(inst, r.outcome, r.prices);
  EXPECT_TRUE(w.holds);
  EXPECT_EQ(w.value, ExtRat(Rat(2)));
}

TEST(CertifyTest, UnconstrainedSwapHasEquilibrium) {
  const EAInstance inst = BuiltinSwapInstance(false);
  const NonexistenceResult r = CertifyNonexistence(inst);
  ASSERT_TRUE(r.exists);
  EXPECT_EQ(r.outcome, (IntVec{1, 1}));
  EXPECT_TRUE(CheckFirstWelfare(inst, r.outcome, r.prices).holds);
  EXPECT_THROW(CheckFirstWelfare(inst, {0, 0}, ArcOnly({0, 0})),
               PreconditionError);
}

TEST(CertifyTest, ShiftingOneValuationChangesNothing) {
  const EAInstance base = BuiltinSwapInstance(true);
  std::vector<FiniteIntFunction> ws = base.economy().valuations();
  ws[1] = ws[1].PlusConstant(Rat(5, 2));
  const EAInstance shifted(Economy(base.graph(), ws), base.constraint());
  const NonexistenceResult a = CertifyNonexistence(base);
  const NonexistenceResult b = CertifyNonexistence(shifted);
  EXPECT_EQ(a.exists, b.exists);
  ASSERT_EQ(a.searches.size(), b.searches.size());
  for (std::size_t i = 0; i < a.searches.size(); ++i) {
    EXPECT_EQ(a.searches[i].arc_prices.found, b.searches[i].arc_prices.found);
    EXPECT_EQ(a.searches[i].arc_prices.program.num_constraints(),
              b.searches[i].arc_prices.program.num_constraints());
  }
  const CEReport r1 = VerifyCompetitiveEquilibrium(base, {0, 0}, ArcOnly({1, 0}));
  const CEReport r2 =
      VerifyCompetitiveEquilibrium(shifted, {0, 0}, ArcOnly({1, 0}));
  EXPECT_EQ(r1.verdict, r2.verdict);
  EXPECT_EQ(r1.agents[1].demand.bundles, r2.agents[1].demand.bundles);
}

}  // namespace
}  // namespace ctn
