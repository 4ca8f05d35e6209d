// Copyright 2026 The plausible Authors
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

// Event and variable independence, noninteraction, type-1 independence and
// the semi-graphoid rules.

#include <gtest/gtest.h>

#include "plausible/conditioning.hpp"
#include "plausible/demos.hpp"
#include "plausible/independence.hpp"
#include "plausible/random.hpp"
#include "plausible/semigraphoid.hpp"

namespace {

using namespace plausible;

Rational q(long p, long r = 1) { return rational(p, r); }

WorldSpace two_vars() { return WorldSpace::binary(std::vector<std::string>{"X1", "X2"}); }

ProbabilityMeasure fair_coins() { return {two_vars(), {q(1, 4), q(1, 4), q(1, 4), q(1, 4)}}; }

// Oracle for probabilistic independence: mu(U n V n V') mu(V') = mu(U n V') mu(V n V').
bool product_rule(const ProbabilityMeasure& mu, const Event& u, const Event& v, const Event& vp) {
  return mu(u & v & vp) * mu(vp) == mu(u & vp) * mu(v & vp);
}

TEST(IndepEvents, ConditioningOnWholeSpace) {
  Rng rng(1);
  auto cps = extend_ranking(random_ranking_function(WorldSpace::named({"a", "b", "c"}), rng));
  for (std::uint64_t m = 0; m < 8; ++m) EXPECT_TRUE(indep_events(cps, Event::from_mask(3, m), cps.all(), cps.all()));
}

TEST(IndepEvents, FairCoinsAreIndependent) {
  auto mu = fair_coins();
  auto cps = extend_probability(mu);
  auto s = mu.space();
  Event h1 = s.assignment(0, 1), h2 = s.assignment(1, 1);
  EXPECT_TRUE(product_rule(mu, h1, h2, s.all()));
  EXPECT_TRUE(indep_events(cps, h1, h2, s.all()));
}

TEST(IndepEvents, AgreesWithProductRuleOnRandomMeasures) {
  Rng rng(21);
  auto s = WorldSpace::named({"a", "b", "c", "d"});
  for (int i = 0; i < 20; ++i) {
    auto mu = random_probability_measure(s, rng, 0);
    auto cps = extend_probability(mu);
    for (std::uint64_t u = 0; u < 16; ++u)
      for (std::uint64_t v = 0; v < 16; ++v) {
        Event eu = Event::from_mask(4, u), ev = Event::from_mask(4, v);
        EXPECT_EQ(indep_events(cps, eu, ev, s.all()) && indep_events(cps, ev, eu, s.all()),
                  product_rule(mu, eu, ev, s.all()));
      }
  }
}

TEST(Noninteract, FollowsFromIndependence) {
  Rng rng(4);
  auto s = WorldSpace::named({"a", "b", "c"});
  for (int i = 0; i < 10; ++i) {
    auto cps = extend_possibility(random_possibility_measure(s, rng, PossibilityConditioning::min));
    for (std::uint64_t u = 0; u < 8; ++u)
      for (std::uint64_t v = 0; v < 8; ++v)
        for (std::uint64_t w = 1; w < 8; ++w) {
          Event eu = Event::from_mask(3, u), ev = Event::from_mask(3, v), ew = Event::from_mask(3, w);
          if (indep_events(cps, eu, ev, ew)) {
            EXPECT_TRUE(noninteract_events(cps, eu, ev, ew).holds);
          }
        }
  }
}

TEST(Noninteract, FairCoinHeadsWithItselfInteracts) {
  auto cps = extend_probability(fair_coins());
  Event h1 = cps.space().assignment(0, 1);
  // 1/2 = mu(h1 n h1) differs from mu(h1) mu(h1) = 1/4.
  EXPECT_FALSE(noninteract_events(cps, h1, h1, cps.all()).holds);
}

TEST(Noninteract, NonstandardAndPossibilityCounterexamples) {
  EXPECT_TRUE(demos::demo_nonstandard().passed());
  EXPECT_TRUE(demos::demo_possibility_ni2().passed());
}

TEST(IndepRv, CoinIsNotIndependentUnderPlp) {
  auto ps = demos::coin_set();
  auto cps = extend_plp(ps);
  EXPECT_FALSE(indep_rv(cps, {0}, {1}, {}));
  EXPECT_TRUE(type1_indep(ps, {0}, {1}, {}));
}

TEST(IndepRv, EmptySideIsVacuous) {
  auto cps = extend_plp(demos::coin_set());
  EXPECT_TRUE(indep_rv(cps, {0}, {}, {}));
  EXPECT_THROW(indep_rv(cps, {0}, {0}, {}), PreconditionError);
}

TEST(Type1, TiltedCoinsAndCorrelatedPair) {
  EXPECT_TRUE(type1_indep(demos::tilted_coin_set(), {0}, {1}, {}));
  // Perfectly correlated: mu(X2=1 | X1=1) = 1 but mu(X2=1) = 1/2.
  auto corr = ProbabilitySet::from_weights(two_vars(), {{q(1, 2), 0, 0, q(1, 2)}});
  EXPECT_FALSE(type1_indep(corr, {0}, {1}, {}));
}

TEST(Type1, PlpIndependenceImpliesTypeOne) {
  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    auto ps = random_probability_set(two_vars(), 2, rng);
    if (indep_rv(extend_plp(ps), {0}, {1}, {})) {
      EXPECT_TRUE(type1_indep(ps, {0}, {1}, {}));
    }
  }
}

TEST(ProbIndep, ThreeFormsAgree) {
  auto s = WorldSpace::named({"a", "b", "c"});
  ProbabilityMeasure corr(s, {q(1, 2), q(1, 4), q(1, 4)});
  Event u = Event::of(3, {0, 1}), v = Event::of(3, {0, 2});
  auto r = check_prob_indep_equivalence(corr, u, v);
  EXPECT_TRUE(r.holds());
  EXPECT_FALSE(product_rule(corr, u, v, s.all()));
  EXPECT_TRUE(check_prob_indep_equivalence(corr, s.none(), v).holds());
  EXPECT_TRUE(check_prob_indep_equivalence(fair_coins(), fair_coins().space().assignment(0, 1),
                                           fair_coins().space().assignment(1, 0))
                  .holds());
}

// ---- semi-graphoid ----------------------------------------------------------

TEST(Semigraphoid, RankingExhaustive) {
  Rng rng(7);
  auto s = WorldSpace::binary(3);
  for (int i = 0; i < 3; ++i) {
    auto rs = check_semigraphoid(extend_ranking(random_ranking_function(s, rng)), SemigraphoidMode::exhaustive);
    ASSERT_EQ(rs.size(), 4U);
    EXPECT_TRUE(all_hold(rs));
  }
}

TEST(Semigraphoid, PlpExhaustive) {
  Rng rng(9);
  auto s = WorldSpace::binary(3);
  for (int i = 0; i < 3; ++i)
    EXPECT_TRUE(all_hold(check_semigraphoid(extend_plp(random_probability_set(s, 2, rng)), SemigraphoidMode::exhaustive)));
}

TEST(Semigraphoid, SymmetryHoldsEverywhere) {
  // Even where other rules may fail, symmetry is built into the definition.
  Rng rng(13);
  auto s = WorldSpace::binary(3);
  auto cps = extend_lower_probability(random_probability_set(s, 2, rng), LowerStrictness::some_positive);
  EXPECT_TRUE(find_report(check_semigraphoid(cps, SemigraphoidMode::exhaustive), "CIRV1").holds());
}

TEST(Semigraphoid, ExhaustiveModeIsCapped) {
  Rng rng(1);
  auto cps = extend_probability(random_probability_measure(WorldSpace::binary(5), rng));
  EXPECT_THROW(check_semigraphoid(cps, SemigraphoidMode::exhaustive), PreconditionError);
}

}  // namespace
