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

// Plausibility core, built-in domains and the conditioning constructions.

#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "plausible/axioms.hpp"
#include "plausible/conditioning.hpp"
#include "plausible/demos.hpp"
#include "plausible/domain_checks.hpp"
#include "plausible/random.hpp"

namespace {

using namespace plausible;

Rational q(long p, long r = 1) { return rational(p, r); }

WorldSpace four() { return WorldSpace::named({"w1", "w2", "w3", "w4"}); }

// Every event over |W| = n worlds.
std::vector<Event> events(std::size_t n) {
  std::vector<Event> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(Event::from_mask(n, m));
  return out;
}

// ---- values and events ---------------------------------------------------

TEST(Rational, ParsesFractionsAndDecimalsExactly) {
  EXPECT_EQ(parse_rational("3/6"), q(1, 2));
  EXPECT_EQ(parse_rational("0.125"), q(1, 8));
  EXPECT_EQ(parse_rational("1"), q(1));
  // Leading zeros are decimal, not octal.
  EXPECT_EQ(parse_rational("010/3"), q(10, 3));
  EXPECT_EQ(parse_rational("0.0625"), q(1, 16));
  EXPECT_THROW(parse_rational("1/0"), ValueError);
  EXPECT_THROW(parse_rational("x"), ValueError);
  EXPECT_EQ(to_string(q(2, 4)), "1/2");
}

TEST(WorldSpace, BinaryWorldNamesFollowVariableOrder) {
  auto s = WorldSpace::binary(std::vector<std::string>{"A", "B"});
  EXPECT_EQ(s.world_names(), (std::vector<std::string>{"00", "01", "10", "11"}));
  EXPECT_EQ(s.names_of(s.assignment(0, 1)), (std::vector<std::string>{"10", "11"}));
  EXPECT_THROW(WorldSpace::named({"a", "a"}), PreconditionError);
}

// ---- unconditional axioms -------------------------------------------------

TEST(Unconditional, UniformProbabilityOnTwoWorlds) {
  ProbabilityMeasure mu(WorldSpace::named({"a", "b"}), {q(1, 2), q(1, 2)});
  auto rs = check_unconditional_axioms(mu);
  for (const char* ax : {"Pl1", "Pl2", "Pl3"}) EXPECT_TRUE(find_report(rs, ax).holds()) << ax;
}

TEST(Unconditional, RankingUsesReversedOrder) {
  RankingFunction k(WorldSpace::named({"a", "b", "c"}), {Rank(0), Rank(2), Rank::infinity()});
  EXPECT_EQ(k(Event::of(3, {})), Rank::infinity());
  EXPECT_EQ(k(Event::of(3, {0, 1, 2})), Rank(0));
  EXPECT_TRUE(all_hold(check_unconditional_axioms(k)));
}

TEST(Unconditional, TopOnEmptySetFailsPl1) {
  auto s = WorldSpace::named({"a", "b"});
  FunctionMeasure<ProbabilityDomain> m(ProbabilityDomain{}, s, [](const Event&) { return Rational(1); });
  auto r = find_report(check_unconditional_axioms(m), "Pl1");
  ASSERT_TRUE(r.violated());
  EXPECT_TRUE(r.witness->event("U").empty());
}

TEST(Unconditional, MalformedMeasuresAreRejected) {
  EXPECT_THROW(ProbabilityMeasure(WorldSpace::named({"a", "b"}), {q(1, 2), q(1, 3)}), MalformedMeasure);
  EXPECT_THROW(PossibilityMeasure(WorldSpace::named({"a", "b"}), {q(1, 2), q(1, 3)}), MalformedMeasure);
}

// ---- cps axioms -------------------------------------------------------------

TEST(CpsAxioms, UniformProbabilityOnFourWorlds) {
  auto cps = extend_probability(ProbabilityMeasure(four(), {q(1, 4), q(1, 4), q(1, 4), q(1, 4)}));
  auto rs = check_cps_axioms(cps);
  for (const char* ax : {"CPl1", "CPl2", "CPl3", "CPl4", "Acc1", "Acc2", "Acc3", "Acc4", "Standard"})
    EXPECT_TRUE(find_report(rs, ax).holds()) << ax;
  // Every one of the 16 x 15 pairs agrees with the ratio computed directly.
  for (const auto& v : events(4)) {
    if (v.empty()) continue;
    for (const auto& u : events(4)) EXPECT_EQ(cps.at(u, v), q(static_cast<long>((u & v).count()), static_cast<long>(v.count())));
  }
}

TEST(CpsAxioms, BrokenRestrictionFailsCPl4) {
  auto s = WorldSpace::named({"a", "b"});
  Cps<ProbabilityDomain> cps(ProbabilityDomain{}, s, [](const Event& u, const Event& v) -> std::optional<Rational> {
    if (v.empty()) return std::nullopt;
    if (v.count() == 1 && v.contains(0) && u.count() == 1) return q(1, 3);  // Pl({a}|{a}) should equal Pl(W|{a})
    return Rational((u & v).count() == v.count() ? 1 : ((u & v).empty() ? 0 : q(1, 2)));
  });
  auto r = find_report(check_cps_axioms(cps), "CPl4");
  ASSERT_TRUE(r.violated());
  EXPECT_TRUE(r.witness->has_event("U"));
}

TEST(CpsAxioms, NonstandardCpsReportsItsWitness) {
  auto cps = demos::nonstandard_cps();
  EXPECT_EQ(cps.unconditional(Event::of(2, {1})), q(0));
  EXPECT_EQ(cps.at(Event::of(2, {1}), Event::of(2, {1})), q(1));
  auto r = find_report(check_cps_axioms(cps), "Standard");
  ASSERT_TRUE(r.violated());
  EXPECT_EQ(r.witness->event("U"), Event::of(2, {1}));
}

TEST(CPl5, RankingIsCoherent) {
  Rng rng(3);
  for (int i = 0; i < 5; ++i)
    EXPECT_TRUE(check_cpl5(extend_ranking(random_ranking_function(four(), rng))).holds());
}

TEST(CPl5, SecondLowerProbabilityFailsAtTheDocumentedTuple) {
  auto cps = extend_lower_probability(demos::lower_cpl5_set(), LowerStrictness::some_positive);
  EXPECT_TRUE(check_cpl5(cps).violated());
  auto r = check_cpl5_at(cps, Event::of(3, {0}), Event::of(3, {1}), Event::of(3, {0, 1}), Event::full(3));
  ASSERT_TRUE(r.violated());
  EXPECT_EQ(r.witness->value("Pl(U|V n V')"), "2/3");
  EXPECT_EQ(r.witness->value("Pl(U'|V n V')"), "1/3");
  EXPECT_EQ(r.witness->value("Pl(U n V|V')"), "0");
  EXPECT_EQ(r.witness->value("Pl(U' n V|V')"), "0");
}

TEST(CPl5, LiftedUnconditionalIsCoherent) {
  Rng rng(5);
  for (int i = 0; i < 3; ++i) {
    auto cps = lift_unconditional(random_probability_measure(four(), rng));
    EXPECT_TRUE(check_cpl5(cps).holds());
  }
}

// ---- algebraic cps --------------------------------------------------------

TEST(Algebraic, BuiltInConstructionsAreAlgebraic) {
  Rng rng(11);
  auto s = four();
  EXPECT_TRUE(all_hold(check_algebraic(extend_probability(random_probability_measure(s, rng)))));
  EXPECT_TRUE(all_hold(check_algebraic(extend_ranking(random_ranking_function(s, rng)))));
  EXPECT_TRUE(all_hold(check_algebraic(extend_possibility(random_possibility_measure(s, rng, PossibilityConditioning::min)))));
  EXPECT_TRUE(all_hold(check_algebraic(extend_possibility(random_possibility_measure(s, rng, PossibilityConditioning::product)))));
  EXPECT_TRUE(all_hold(check_algebraic(extend_plp(random_probability_set(s, 2, rng)))));
}

TEST(Algebraic, LowerProbabilityHasAnAlg1Obstruction) {
  auto cps = extend_lower_probability(demos::alg1_obstruction_set(), LowerStrictness::some_positive);
  auto r = find_report(check_algebraic_obstructions(cps), "Alg1");
  ASSERT_TRUE(r.violated());
  // Oracle: recompute the obstruction from the witness events.
  const auto& w = *r.witness;
  EXPECT_EQ(cps.at(w.event("U1"), w.event("V1")), cps.at(w.event("U1'"), w.event("V2")));
  EXPECT_EQ(cps.at(w.event("U2"), w.event("V1")), cps.at(w.event("U2'"), w.event("V2")));
  EXPECT_NE(cps.at(w.event("U1") | w.event("U2"), w.event("V1")), cps.at(w.event("U1'") | w.event("U2'"), w.event("V2")));
}

TEST(Algebraic, SingleWorldIsVacuouslyAlgebraic) {
  auto cps = extend_probability(ProbabilityMeasure(WorldSpace::named({"only"}), {q(1)}));
  EXPECT_TRUE(all_hold(check_algebraic(cps)));
}

TEST(Monotonic, ProductsAreMonotone) {
  EXPECT_TRUE(check_monotonic_otimes(ProbabilityDomain{}, value_grid(ProbabilityDomain{})).holds());
  std::vector<Rank> ranks;
  for (int i = 0; i <= 5; ++i) ranks.push_back(Rank(i));
  ranks.push_back(Rank::infinity());
  EXPECT_TRUE(check_monotonic_otimes(RankingDomain{}, ranks).holds());
  PossibilityDomain pmin(PossibilityConditioning::min);
  EXPECT_TRUE(check_monotonic_otimes(pmin, value_grid(pmin)).holds());
}

TEST(Lemma, ExpansionOverTrivialPartition) {
  Rng rng(2);
  auto cps = extend_probability(random_probability_measure(four(), rng, 0));
  auto x = Event::of(4, {0, 2}), y = Event::of(4, {0, 1, 2});
  EXPECT_TRUE(check_lemma1_expansion(cps, x, y, {cps.all()}).holds());
  EXPECT_TRUE(check_lemma1_expansion(cps, x, y, {Event::of(4, {0, 3}), Event::of(4, {1}), Event::of(4, {2})}).holds());
  EXPECT_THROW(check_lemma1_expansion(cps, x, y, {Event::of(4, {0, 1})}), PreconditionError);
}

// ---- domain-level checks ----------------------------------------------------

TEST(BnCompatible, BuiltInDomains) {
  EXPECT_TRUE(all_hold(check_bn_compatible(ProbabilityDomain{})));
  EXPECT_TRUE(all_hold(check_bn_compatible(RankingDomain{})));
  EXPECT_TRUE(all_hold(check_bn_compatible(PossibilityDomain(PossibilityConditioning::min))));
  EXPECT_TRUE(all_hold(check_bn_compatible(PossibilityDomain(PossibilityConditioning::product))));
  EXPECT_TRUE(all_hold(check_bn_compatible(PlpDomain(2), 4000)));
}

// A probability domain whose product is a - b clipped at 0: not commutative.
struct SkewDomain : ProbabilityDomain {
  value_type otimes(const value_type& a, const value_type& b) const { return a > b ? Rational(a - b) : Rational(0); }
};

TEST(BnCompatible, NonCommutativeProductFailsBN1) {
  auto r = find_report(check_bn_compatible(SkewDomain{}), "BN1");
  ASSERT_TRUE(r.violated());
  EXPECT_TRUE(r.witness.has_value());
}

TEST(Rich, WitnessPairs) {
  auto p = find_rich_pair(ProbabilityDomain{}, 4);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->first + p->second, q(1));
  auto r = find_rich_pair(RankingDomain{}, 4);
  ASSERT_TRUE(r);
  EXPECT_EQ(std::min(r->first, r->second), Rank(0));
  EXPECT_TRUE(check_rich(ProbabilityDomain{}, 1).holds());
}

// ---- individual domains -----------------------------------------------------

TEST(PlpDomain, SolveOtimes) {
  PlpDomain d(2);
  EXPECT_EQ(*d.solve_otimes(d.parse("1/4,*"), d.parse("1/2,*")), d.parse("1/2,*"));
  auto f = d.parse("1/4,1/8");
  EXPECT_EQ(*d.solve_otimes(f, d.top()), f);
  EXPECT_FALSE(d.solve_otimes(f, d.bottom()));
  EXPECT_THROW(PlpDomain(0), ConfigurationError);
}

TEST(PlpDomain, ParseAndFormatRoundTrip) {
  PlpDomain d(3);
  for (const char* t : {"bot", "top", "1/2,*,1/4"}) EXPECT_EQ(d.format(d.parse(t)), t);
  EXPECT_THROW(d.parse("1/2,1/2"), ValueError);
}

TEST(Ranking, SolveMatchesSubtraction) {
  RankingDomain d;
  EXPECT_EQ(*d.solve_otimes(Rank(3), Rank(1)), Rank(2));
  EXPECT_FALSE(d.solve_otimes(Rank(1), Rank::infinity()));
  EXPECT_EQ(d.parse("inf"), Rank::infinity());
}

TEST(Possibility, MinDomainOfProduct) {
  PossibilityDomain d(PossibilityConditioning::min);
  EXPECT_FALSE(d.in_dom_otimes(q(1, 2), q(1, 3)));
  EXPECT_TRUE(d.in_dom_otimes(q(1), q(1, 3)));
  EXPECT_TRUE(d.in_dom_otimes(q(1, 3), q(1, 2)));
}

// ---- conditioning -----------------------------------------------------------

TEST(Conditioning, UniformRatio) {
  auto cps = extend_probability(ProbabilityMeasure(four(), {q(1, 4), q(1, 4), q(1, 4), q(1, 4)}));
  EXPECT_EQ(cps.at(Event::of(4, {0}), Event::of(4, {0, 1})), q(1, 2));
}

TEST(Conditioning, RankingSubtracts) {
  // kappa(U n V) = 3, kappa(V) = 1 gives 2.
  auto s = WorldSpace::named({"a", "b", "c"});
  auto cps = extend_ranking(RankingFunction(s, {Rank(0), Rank(1), Rank(3)}));
  EXPECT_EQ(cps.at(Event::of(3, {2}), Event::of(3, {1, 2})), Rank(2));
  EXPECT_EQ(cps.at(Event::of(3, {1}), Event::of(3, {1, 2})), Rank(0));
  auto inf = extend_ranking(RankingFunction(s, {Rank(0), Rank(1), Rank::infinity()}));
  EXPECT_FALSE(inf.conditionable(Event::of(3, {2})));
}

TEST(Conditioning, PossibilityBothVariants) {
  // Poss(V n U) = 1/4, Poss(V) = 1/2.
  PossibilityMeasure m(WorldSpace::named({"a", "b", "c"}), {q(1, 4), q(1, 2), q(1)});
  Event u = Event::of(3, {0}), v = Event::of(3, {0, 1});
  EXPECT_EQ(extend_possibility(m, PossibilityConditioning::min).at(u, v), q(1, 4));
  EXPECT_EQ(extend_possibility(m, PossibilityConditioning::product).at(u, v), q(1, 2));
  Event u2 = Event::of(3, {1});
  EXPECT_EQ(extend_possibility(m, PossibilityConditioning::min).at(u2, v), q(1));
  EXPECT_EQ(extend_possibility(m, PossibilityConditioning::product).at(u2, v), q(1));
  PossibilityMeasure z(WorldSpace::named({"a", "b"}), {q(0), q(1)});
  EXPECT_FALSE(extend_possibility(z).conditionable(Event::of(2, {0})));
}

TEST(Conditioning, SingletonSetMatchesProbability) {
  Rng rng(8);
  auto mu = random_probability_measure(four(), rng, 0);
  ProbabilitySet ps(four(), {mu});
  auto p = extend_probability(mu);
  auto all = extend_lower_probability(ps, LowerStrictness::all_positive);
  auto some = extend_lower_probability(ps, LowerStrictness::some_positive);
  auto iv = extend_lower_upper(ps, LowerStrictness::all_positive);
  for (const auto& v : events(4)) {
    if (v.empty()) continue;
    for (const auto& u : events(4)) {
      EXPECT_EQ(all.at(u, v), p.at(u, v));
      EXPECT_EQ(some.at(u, v), p.at(u, v));
      EXPECT_EQ(iv.at(u, v).lower, iv.at(u, v).upper);
    }
  }
}

TEST(Conditioning, PlpEmptyEventIsBottom) {
  auto cps = extend_plp(demos::coin_set());
  for (const auto& v : events(4))
    if (cps.conditionable(v)) {
      EXPECT_EQ(cps.at(cps.none(), v), PlpValue::bottom());
    }
}

TEST(Conditioning, LiftedExtremeCases) {
  PossibilityMeasure m(WorldSpace::named({"a", "b", "c"}), {q(1), q(1, 2), q(0)});
  auto cps = lift_unconditional(m);
  using L = value_of<std::remove_cvref_t<decltype(cps.domain())>>;
  EXPECT_EQ(cps.at(Event::of(3, {0}), Event::of(3, {0, 1})), L::top());
  EXPECT_EQ(cps.at(Event::of(3, {2}), Event::of(3, {1, 2})), L::bottom());
  EXPECT_FALSE(cps.conditionable(Event::of(3, {2})));
}

// ---- property: random constructions satisfy the full suite ----------------

TEST(Property, RandomConstructionsPassTheSuite) {
  Rng rng(99);
  for (int i = 0; i < 4; ++i) {
    auto s = WorldSpace::binary(2);
    auto check = [](const auto& cps) {
      auto rs = check_cps_axioms(cps);
      rs.push_back(check_cpl5(cps));
      for (auto& r : check_algebraic(cps)) rs.push_back(r);
      return all_hold(rs);
    };
    EXPECT_TRUE(check(extend_probability(random_probability_measure(s, rng))));
    EXPECT_TRUE(check(extend_ranking(random_ranking_function(s, rng))));
    EXPECT_TRUE(check(extend_plp(random_probability_set(s, 3, rng))));
  }
}

}  // namespace
