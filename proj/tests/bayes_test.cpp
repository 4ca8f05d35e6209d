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

// Dags, d-separation, network construction, representation and
// reconstruction, and the soundness and completeness checks.

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "plausible/bayes/construct.hpp"
#include "plausible/bayes/counterexample.hpp"
#include "plausible/bayes/dag.hpp"
#include "plausible/bayes/dsep.hpp"
#include "plausible/bayes/network.hpp"
#include "plausible/bayes/random_network.hpp"
#include "plausible/bayes/reconstruct.hpp"
#include "plausible/bayes/soundness.hpp"
#include "plausible/conditioning.hpp"
#include "plausible/random.hpp"

namespace {

using namespace plausible;
using namespace plausible::bayes;

Rational q(long p, long r = 1) { return rational(p, r); }

Dag chain() {
  Dag g({"A", "B", "C"});
  g.add_edge("A", "B");
  g.add_edge("B", "C");
  return g;
}

Dag collider() {
  Dag g({"A", "B", "C"});
  g.add_edge("A", "C");
  g.add_edge("B", "C");
  return g;
}

// Separation in the moral graph of the ancestral set: a route to
// d-separation that shares nothing with the trail and reachability code.
bool moral_separated(const Dag& g, const NodeSet& x, const NodeSet& y, const NodeSet& z) {
  const std::size_t n = g.size();
  std::vector<char> keep(n, 0);
  std::vector<Node> stack;
  for (const auto* s : {&x, &y, &z})
    for (Node v : *s) stack.push_back(v);
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    if (keep[v]) continue;
    keep[v] = 1;
    for (Node p : g.parents(v)) stack.push_back(p);
  }
  std::vector<std::set<Node>> adj(n);
  for (Node v = 0; v < n; ++v) {
    if (!keep[v]) continue;
    const auto& ps = g.parents(v);
    for (Node p : ps) {
      adj[v].insert(p);
      adj[p].insert(v);
      for (Node p2 : ps)
        if (p2 != p) adj[p].insert(p2);
    }
  }
  std::vector<char> blocked(n, 0), seen(n, 0);
  for (Node v : z) blocked[v] = 1;
  for (Node v : x) stack.push_back(v);
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = 1;
    for (Node w : adj[v])
      if (keep[w] && !blocked[w]) stack.push_back(w);
  }
  for (Node v : y)
    if (seen[v]) return false;
  return true;
}

// ---- dag ----------------------------------------------------------------

TEST(Dag, RejectsCyclesAndSelfLoops) {
  auto g = chain();
  EXPECT_THROW(g.add_edge("C", "A"), PreconditionError);
  EXPECT_THROW(g.add_edge("A", "A"), PreconditionError);
  EXPECT_THROW(g.index_of("Q"), PreconditionError);
}

TEST(Dag, RelativesAreConsistentWithEdges) {
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    auto g = random_dag(6, rng);
    for (Node v = 0; v < g.size(); ++v) {
      for (Node p : g.parents(v)) EXPECT_TRUE(g.has_edge(p, v));
      for (Node c : g.children(v)) EXPECT_TRUE(g.has_edge(v, c));
      auto des = g.descendants(v), nd = g.nondescendants(v);
      EXPECT_EQ(des.size() + nd.size() + 1, g.size());
      for (Node d : des) EXPECT_TRUE(std::find(nd.begin(), nd.end(), d) == nd.end());
    }
    auto order = g.topological_order();
    for (const auto& [a, b] : g.edges())
      EXPECT_LT(std::find(order.begin(), order.end(), a), std::find(order.begin(), order.end(), b));
  }
}

// ---- d-separation -------------------------------------------------------

TEST(Dsep, ChainAndCollider) {
  EXPECT_TRUE(d_separated(chain(), {0}, {2}, {1}));
  EXPECT_FALSE(d_separated(chain(), {0}, {2}, {}));
  EXPECT_TRUE(d_separated(collider(), {0}, {1}, {}));
  EXPECT_FALSE(d_separated(collider(), {0}, {1}, {2}));
}

TEST(Dsep, AdjacentNodesAreNeverSeparated) {
  Dag g({"A", "B", "C", "D"});
  g.add_edge("A", "B");
  g.add_edge("C", "B");
  g.add_edge("B", "D");
  for (const auto& z : std::vector<NodeSet>{{}, {2}, {3}, {2, 3}}) EXPECT_FALSE(d_separated(g, {0}, {1}, z));
}

TEST(Dsep, DescendantOfColliderOpensIt) {
  Dag g({"A", "B", "C", "D"});
  g.add_edge("A", "C");
  g.add_edge("B", "C");
  g.add_edge("C", "D");
  EXPECT_FALSE(d_separated(g, {0}, {1}, {3}));
  auto t = find_active_trail(g, 0, 1, {3});
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, (std::vector<Node>{0, 2, 1}));
}

TEST(Dsep, OverlappingSetsAreRejected) {
  EXPECT_THROW(d_separated(chain(), {0}, {0}, {}), PreconditionError);
  EXPECT_THROW(d_separated(chain(), {}, {1}, {}), PreconditionError);
}

TEST(Dsep, ThreeImplementationsAgree) {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + below(rng, 6);
    auto g = random_dag(n, rng);
    auto qy = random_query(n, rng);
    bool reach = d_separated_by_reachability(g, qy.x, qy.y, qy.z);
    EXPECT_EQ(reach, d_separated_by_trails(g, qy.x, qy.y, qy.z));
    EXPECT_EQ(reach, moral_separated(g, qy.x, qy.y, qy.z));
  }
}

// ---- compatibility and construction ----------------------------------------

ProbabilityMeasure markov_chain() {
  // X1 -> X2 -> X3: mu(x1) mu(x2|x1) mu(x3|x2).
  auto s = WorldSpace::binary(3);
  Rational p1[2] = {q(1, 3), q(2, 3)};
  Rational p2[2][2] = {{q(3, 4), q(1, 4)}, {q(1, 5), q(4, 5)}};
  Rational p3[2][2] = {{q(1, 2), q(1, 2)}, {q(1, 10), q(9, 10)}};
  std::vector<Rational> w;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) w.push_back(p1[a] * p2[a][b] * p3[b][c]);
  return {s, w};
}

ProbabilityMeasure product_measure(std::size_t n) {
  auto s = WorldSpace::binary(n);
  std::vector<Rational> w;
  for (std::size_t x = 0; x < s.size(); ++x) {
    Rational p = 1;
    for (std::size_t i = 0; i < n; ++i) p *= ((x >> i) & 1U) ? q(1, static_cast<long>(i + 2)) : 1 - q(1, static_cast<long>(i + 2));
    w.push_back(p);
  }
  return {s, w};
}

TEST(Compatible, ProductMeasureWithEmptyDag) {
  auto cps = extend_probability(product_measure(3));
  EXPECT_TRUE(compatible(cps, Dag(cps.space().variables())).holds);
}

TEST(Compatible, ChainMeasureAgainstCollider) {
  auto cps = extend_probability(markov_chain());
  Dag g(cps.space().variables());
  g.add_edge("X1", "X2");
  g.add_edge("X3", "X2");
  auto c = compatible(cps, g);
  ASSERT_FALSE(c.holds);
  EXPECT_TRUE(c.failing_node.has_value());
}

TEST(ConstructBn, MarkovChain) {
  auto cps = extend_probability(markov_chain());
  auto g = construct_bn(cps, {0, 1, 2});
  EXPECT_EQ(g.edges(), (std::vector<std::pair<Node, Node>>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(compatible(cps, g).holds);
}

TEST(ConstructBn, ProductMeasureHasNoEdges) {
  auto cps = extend_probability(product_measure(3));
  std::vector<Node> order = {0, 1, 2};
  do {
    EXPECT_EQ(construct_bn(cps, order).edge_count(), 0U);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(ConstructBn, SingleNodeAndBadOrdering) {
  auto cps = extend_probability(product_measure(1));
  EXPECT_EQ(construct_bn(cps, {0}).edge_count(), 0U);
  auto cps3 = extend_probability(product_measure(3));
  EXPECT_THROW(construct_bn(cps3, {0, 0, 1}), PreconditionError);
}

TEST(ConstructBn, EdgesRespectOrderingAndAreCompatible) {
  Rng rng(41);
  auto s = WorldSpace::binary(3);
  for (int i = 0; i < 10; ++i) {
    auto cps = extend_ranking(random_ranking_function(s, rng));
    std::vector<Node> order = {2, 0, 1};
    auto g = construct_bn(cps, order);
    for (const auto& [a, b] : g.edges())
      EXPECT_LT(std::find(order.begin(), order.end(), a), std::find(order.begin(), order.end(), b));
    EXPECT_TRUE(compatible(cps, g).holds);
  }
}

// ---- representation -------------------------------------------------------

template <typename D>
QuantitativeBN<D> two_nodes(const D& d, std::array<value_of<D>, 2> x, std::array<value_of<D>, 2> y0,
                            std::array<value_of<D>, 2> y1) {
  Dag g({"X", "Y"});
  g.add_edge("X", "Y");
  return {d, g, {Cpt<value_of<D>>{{x}}, Cpt<value_of<D>>{{y0, y1}}}};
}

TEST(Representable, ProbabilityAndRanking) {
  ProbabilityDomain p;
  EXPECT_TRUE(check_representable(two_nodes(p, {q(1, 3), q(2, 3)}, {q(1, 2), q(1, 2)}, {1, 0})).holds());
  RankingDomain r;
  EXPECT_TRUE(check_representable(two_nodes(r, {Rank(0), Rank(1)}, {Rank(0), Rank(2)}, {Rank(1), Rank(0)})).holds());
  auto bad = check_representable(two_nodes(p, {q(1, 3), q(1, 3)}, {q(1, 2), q(1, 2)}, {1, 0}));
  ASSERT_TRUE(bad.violated());
  EXPECT_EQ(bad.axiom, "R1");
}

TEST(Representable, PossibilityMinR2FailureFoundBySearch) {
  PossibilityDomain d(PossibilityConditioning::min);
  std::vector<Rational> grid = {0, q(1, 4), q(1, 2), q(3, 4), 1};
  std::vector<std::array<Rational, 2>> rows;
  for (const auto& a : grid)
    for (const auto& b : grid)
      if (std::max(a, b) == 1) rows.push_back({a, b});
  bool found = false;
  for (const auto& x : rows)
    for (const auto& y0 : rows)
      for (const auto& y1 : rows) {
        if (found) continue;
        auto rep = check_representable(two_nodes(d, x, y0, y1));
        if (!rep.violated()) continue;
        ASSERT_EQ(rep.axiom, "R2");
        const auto& w = *rep.witness;
        // Oracle: the reported pair really lies outside Dom(min).
        EXPECT_FALSE(d.in_dom_otimes(d.parse(w.value("left")), d.parse(w.value("right"))));
        EXPECT_EQ(w.value("j"), "1");
        EXPECT_EQ(w.value("k"), "2");
        found = true;
      }
  EXPECT_TRUE(found);
}

TEST(Reconstruct, RankingChainProduct) {
  RankingDomain r;
  auto bn = two_nodes(r, {Rank(0), Rank(1)}, {Rank(0), Rank(2)}, {Rank(1), Rank(0)});
  auto cps = reconstruct(bn);
  const auto& s = cps.space();
  EXPECT_EQ(cps.unconditional(Event::of(4, {*s.find_world("11")})), Rank(1));
  EXPECT_EQ(cps.unconditional(Event::of(4, {*s.find_world("01")})), Rank(2));
  EXPECT_EQ(cps.at(s.assignment(1, 0), s.assignment(0, 1)), Rank(1));
}

TEST(Reconstruct, UniformCptsGiveUniformJoint) {
  Rng rng(3);
  ProbabilityDomain p;
  for (int i = 0; i < 5; ++i) {
    auto g = random_dag(4, rng);
    std::vector<Cpt<Rational>> tables;
    for (Node v = 0; v < g.size(); ++v)
      tables.push_back({std::vector<std::array<Rational, 2>>(std::size_t{1} << g.parents(v).size(), {q(1, 2), q(1, 2)})});
    auto joint = joint_values(QuantitativeBN<ProbabilityDomain>(p, g, tables));
    for (const auto& x : joint) EXPECT_EQ(x, q(1, 16));
  }
}

TEST(Reconstruct, RejectsUnrepresentable) {
  ProbabilityDomain p;
  EXPECT_THROW(reconstruct(two_nodes(p, {q(1, 3), q(1, 3)}, {q(1, 2), q(1, 2)}, {1, 0})), PreconditionError);
}

TEST(Reconstruct, ProbabilityRoundTripIsExact) {
  auto mu = markov_chain();
  auto cps = extend_probability(mu);
  auto bn = extract_cpts(cps, construct_bn(cps, {0, 1, 2}));
  auto back = reconstruct(bn);
  for (std::uint64_t v = 0; v < 256; ++v) {
    Event ev = Event::from_mask(8, v);
    ASSERT_EQ(back.conditionable(ev), cps.conditionable(ev));
    if (!cps.conditionable(ev)) continue;
    for (std::uint64_t u = 0; u < 256; ++u) {
      Event eu = Event::from_mask(8, u);
      ASSERT_EQ(back.at(eu, ev), Rational(mu(eu & ev) / mu(ev)));
    }
  }
}

TEST(Reconstruct, RandomNetworksAreCompatibleAndAgree) {
  Rng rng(12);
  RankingDomain r;
  PlpDomain plp(2);
  for (int i = 0; i < 8; ++i) {
    auto g = random_dag(3, rng);
    auto bn = random_network(r, g, rng);
    auto cps = reconstruct(bn);
    EXPECT_TRUE(compatible(cps, g).holds);
    auto again = extract_cpts(cps, g);
    for (Node v = 0; v < g.size(); ++v)
      for (std::size_t c = 0; c < bn.table(v).rows.size(); ++c)
        if (cps.conditionable(cps.space().assignment_code(g.parents(v), c))) {
          EXPECT_EQ(again.table(v).rows[c], bn.table(v).rows[c]);
        }
    EXPECT_TRUE(compatible(reconstruct(random_network(plp, g, rng)), g).holds);
  }
}

// Known gaps for min conditioning, kept here so a change in behaviour shows.

TEST(PossibilityMin, IndependentRootsReconstructIncompatibly) {
  PossibilityDomain d(PossibilityConditioning::min);
  QuantitativeBN<PossibilityDomain> bn(d, Dag::numbered(2), {Cpt<Rational>{{{q(7, 12), q(1)}}}, Cpt<Rational>{{{q(1), q(1, 2)}}}});
  ASSERT_TRUE(check_representable(bn).holds());
  auto cps = reconstruct(bn);
  const auto& s = cps.space();
  // Poss(X1=0, X2=1) = 1/2 = Poss(X2=1), so conditioning on X2=1 lifts X1=0 to 1.
  EXPECT_EQ(cps.at(s.assignment(0, 0), s.assignment(1, 1)), q(1));
  EXPECT_EQ(cps.unconditional(s.assignment(0, 0)), q(7, 12));
  EXPECT_FALSE(compatible(cps, bn.dag()).holds);
}

TEST(PossibilityMin, ExtractedCptsCanFailR2) {
  auto s = WorldSpace::binary(3);
  PossibilityMeasure pm(s, {q(1, 2), 0, 1, 0, q(1, 2), q(1, 4), 1, 1}, PossibilityConditioning::min);
  auto cps = extend_possibility(pm);
  auto bn = extract_cpts(cps, construct_bn(cps, {0, 2, 1}));
  auto r = check_representable(bn);
  ASSERT_TRUE(r.violated());
  EXPECT_EQ(r.axiom, "R2");
  EXPECT_EQ(r.witness->value("left"), "1/4");
  EXPECT_EQ(r.witness->value("right"), "0");
  // The chain product itself is still right.
  auto joint = joint_values(bn);
  for (std::size_t w = 0; w < 8; ++w) EXPECT_EQ(joint[w], pm(Event::of(8, {w})));
}

// ---- soundness and completeness -------------------------------------------

TEST(Soundness, ChainProbability) { EXPECT_TRUE(dsep_soundness_check(chain(), ProbabilityDomain{}, 50).holds()); }

TEST(Soundness, ColliderPlp) { EXPECT_TRUE(dsep_soundness_check(collider(), PlpDomain(2), 20).holds()); }

TEST(Soundness, EmptyDagRanking) {
  EXPECT_TRUE(dsep_soundness_check(Dag({"A", "B", "C"}), RankingDomain{}, 20).holds());
}

TEST(Counterexample, ColliderGivenChildIsXor) {
  auto g = collider();
  auto bn = dsep_counterexample(g, ProbabilityDomain{}, 0, 1, {2});
  ASSERT_TRUE(bn);
  EXPECT_EQ(bn->table(2).rows[0], (std::array<Rational, 2>{1, 0}));
  EXPECT_EQ(bn->table(2).rows[1], (std::array<Rational, 2>{0, 1}));
  auto cps = reconstruct(*bn);
  const auto& s = cps.space();
  Event a0 = s.assignment(0, 0), b0 = s.assignment(1, 0), c0 = s.assignment(2, 0);
  EXPECT_EQ(cps.at(a0, b0 & c0), q(1));
  EXPECT_EQ(cps.at(a0, c0), q(1, 2));
  EXPECT_TRUE(verify_counterexample(*bn, g, 0, 1, {2}).holds());
}

TEST(Counterexample, ChainCopiesAlongTheTrail) {
  auto g = chain();
  auto bn = dsep_counterexample(g, ProbabilityDomain{}, 0, 2, {});
  ASSERT_TRUE(bn);
  auto cps = reconstruct(*bn);
  const auto& s = cps.space();
  EXPECT_EQ(cps.at(s.assignment(2, 0), s.assignment(0, 0)), q(1));
  EXPECT_EQ(cps.unconditional(s.assignment(2, 0)), q(1, 2));
  EXPECT_TRUE(verify_counterexample(*bn, g, 0, 2, {}).holds());

  // With ranks the rich pair is (0, 0): C = 0 stays top overall but becomes
  // bottom once A = 1.
  auto rbn = dsep_counterexample(g, RankingDomain{}, 0, 2, {});
  ASSERT_TRUE(rbn);
  auto rcps = reconstruct(*rbn);
  EXPECT_EQ(rcps.unconditional(s.assignment(2, 0)), Rank(0));
  EXPECT_EQ(rcps.at(s.assignment(2, 0), s.assignment(0, 1)), Rank::infinity());
  EXPECT_FALSE(indep_rv(rcps, {0}, {2}, {}));
}

TEST(Counterexample, NoneWhenSeparated) {
  EXPECT_FALSE(dsep_counterexample(chain(), ProbabilityDomain{}, 0, 2, {1}));
}

TEST(Counterexample, RandomDagsVerify) {
  Rng rng(77);
  for (int i = 0; i < 10; ++i) {
    auto g = random_dag(4, rng);
    for (const auto& qy : all_queries(4)) {
      if (qy.x.size() != 1 || qy.y.size() != 1 || d_separated(g, qy.x, qy.y, qy.z)) continue;
      auto bn = dsep_counterexample(g, ProbabilityDomain{}, qy.x[0], qy.y[0], qy.z);
      ASSERT_TRUE(bn);
      EXPECT_TRUE(verify_counterexample(*bn, g, qy.x[0], qy.y[0], qy.z).holds());
    }
  }
}

}  // namespace
