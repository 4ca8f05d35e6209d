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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "plausible/axioms.hpp"
#include "plausible/conditioning.hpp"
#include "plausible/independence.hpp"

namespace plausible::demos {

// ---- the named instances -----------------------------------------------

/// W = {a,b,c}; mu puts all mass on c, mu' gives a 2/3 and b 1/3.
inline ProbabilitySet lower_cpl5_set() {
  return ProbabilitySet::from_weights(WorldSpace::named({"a", "b", "c"}),
                                      {{0, 0, 1}, {rational(2, 3), rational(1, 3), 0}});
}

/// Two tosses of a coin that is double-headed (member 0) or double-tailed
/// (member 1). Value 1 is heads.
inline ProbabilitySet coin_set() {
  return ProbabilitySet::from_weights(WorldSpace::binary(std::vector<std::string>{"X1", "X2"}),
                                      {{0, 0, 0, 1}, {1, 0, 0, 0}});
}

/// Same coin landing heads with probability 99/100 or 1/100 on each toss.
inline ProbabilitySet tilted_coin_set() {
  auto product = [](Rational h) {
    Rational t = 1 - h;
    return std::vector<Rational>{t * t, t * h, h * t, h * h};
  };
  return ProbabilitySet::from_weights(WorldSpace::binary(std::vector<std::string>{"X1", "X2"}),
                                      {product(rational(99, 100)), product(rational(1, 100))});
}

/// W = {a,b}, mu(a) = 1, and yet {b} is conditionable with mu(b|b) = 1.
inline Cps<ProbabilityDomain> nonstandard_cps() {
  auto space = WorldSpace::named({"a", "b"});
  return {ProbabilityDomain{}, space, [](const Event& u, const Event& v) -> std::optional<Rational> {
            if (v.empty()) return std::nullopt;
            std::size_t anchor = v.contains(0) ? 0 : 1;
            return Rational(u.contains(anchor) ? 1 : 0);
          }};
}

/// Possibility degrees (1, 1/2, 1/4) on {w1, w2, w3} under min conditioning:
/// {w2} and {w2,w3} do not interact given W but are not independent.
inline PossibilityMeasure possibility_ni2_measure() {
  return {WorldSpace::named({"w1", "w2", "w3"}), {1, rational(1, 2), rational(1, 4)}, PossibilityConditioning::min};
}

/// Three measures on four worlds whose lower probability admits no
/// addition: found by the obstruction search and kept as a fixture.
inline ProbabilitySet alg1_obstruction_set() {
  auto r = [](long p) { return rational(p, 10); };
  return ProbabilitySet::from_weights(WorldSpace::named({"w1", "w2", "w3", "w4"}),
                                      {{r(1), r(4), r(4), r(1)}, {r(4), r(1), r(1), r(4)}, {r(4), r(4), r(1), r(1)}});
}

// ---- replay ------------------------------------------------------------

struct DemoCheck {
  std::string label;
  std::string expected;
  std::string actual;
  bool ok() const { return expected == actual; }
};

struct DemoResult {
  std::string name;
  std::vector<DemoCheck> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
};

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Lower probability conditioned on the members that give V positive mass
/// is not coherent.
inline DemoResult demo_lower_cpl5() {
  auto ps = lower_cpl5_set();
  const auto& s = ps.space();
  auto cps = extend_lower_probability(ps, LowerStrictness::some_positive);
  Event u = Event::of(3, {0}), u2 = Event::of(3, {1}), v = Event::of(3, {0, 1}), w = s.all();
  auto at = check_cpl5_at(cps, u, u2, v, w);
  DemoResult r{"lower-cpl5", {}};
  r.checks.push_back({"CPl5 (exhaustive)", "violated", to_string(check_cpl5(cps).verdict)});
  r.checks.push_back({"CPl5 at U={a}, U'={b}, V={a,b}, V'=W", "violated", to_string(at.verdict)});
  r.checks.push_back({"P_*(U n V|W)", "0", to_string(cps.at(u & v, w))});
  r.checks.push_back({"P_*(U' n V|W)", "0", to_string(cps.at(u2 & v, w))});
  r.checks.push_back({"P_*(U|V)", "2/3", to_string(cps.at(u, v))});
  r.checks.push_back({"P_*(U'|V)", "1/3", to_string(cps.at(u2, v))});
  return r;
}

/// Type-1 independence and noninteractivity hold for the two tosses, the
/// vector-valued independence does not.
inline DemoResult demo_coin() {
  auto ps = coin_set();
  const auto& s = ps.space();
  auto cps = extend_plp(ps);
  bool ni = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) ni = ni && noninteract_events(cps, s.assignment(0, i), s.assignment(1, j), s.all()).holds;
  auto raw = ps.conditional_vector(s.assignment(0, 1), s.assignment(1, 1));
  DemoResult r{"coin", {}};
  r.checks.push_back({"type-1 independent", "yes", yes_no(type1_indep(ps, {0}, {1}, {}))});
  r.checks.push_back({"NI", "yes", yes_no(ni)});
  r.checks.push_back({"I_plp", "no", yes_no(indep_rv(cps, {0}, {1}, {}))});
  r.checks.push_back({"f_{X1=h}(1)", "0", to_string(ps.member(1)(s.assignment(0, 1)))});
  r.checks.push_back({"f_{X1=h|X2=h}(1)", "*", raw[1] ? to_string(*raw[1]) : "*"});
  return r;
}

/// Conditioning on a null event lets {b} fail to be independent of itself
/// while not interacting with itself.
inline DemoResult demo_nonstandard() {
  auto cps = nonstandard_cps();
  Event b = Event::of(2, {1});
  auto standard = find_report(check_cps_axioms(cps), "Standard");
  DemoResult r{"nonstandard", {}};
  r.checks.push_back({"NI({b},{b}|W)", "yes", yes_no(noninteract_events(cps, b, b, cps.all()).holds)});
  r.checks.push_back({"I({b},{b}|W)", "no", yes_no(indep_events(cps, b, b, cps.all()))});
  r.checks.push_back({"standard", "violated", to_string(standard.verdict)});
  return r;
}

/// With positive probabilities the vector-valued independence returns.
inline DemoResult demo_tilted_coin() {
  auto ps = tilted_coin_set();
  const auto& s = ps.space();
  auto cps = extend_plp(ps);
  bool ni = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) ni = ni && noninteract_events(cps, s.assignment(0, i), s.assignment(1, j), s.all()).holds;
  DemoResult r{"tilted-coin", {}};
  r.checks.push_back({"type-1 independent", "yes", yes_no(type1_indep(ps, {0}, {1}, {}))});
  r.checks.push_back({"NI", "yes", yes_no(ni)});
  r.checks.push_back({"I_plp", "yes", yes_no(indep_rv(cps, {0}, {1}, {}))});
  return r;
}

/// Min conditioning: noninteraction without independence.
inline DemoResult demo_possibility_ni2() {
  auto cps = extend_possibility(possibility_ni2_measure());
  Event u = Event::of(3, {1}), v = Event::of(3, {1, 2});
  DemoResult r{"possibility-ni2", {}};
  r.checks.push_back({"NI({w2},{w2,w3}|W)", "yes", yes_no(noninteract_events(cps, u, v, cps.all()).holds)});
  r.checks.push_back({"I({w2},{w2,w3}|W)", "no", yes_no(indep_events(cps, u, v, cps.all()))});
  return r;
}

/// Lower probability is not algebraic: two disjoint pairs with equal
/// component values but different unions.
inline DemoResult demo_alg1_obstruction() {
  auto cps = extend_lower_probability(alg1_obstruction_set(), LowerStrictness::some_positive);
  auto reports = check_algebraic_obstructions(cps);
  DemoResult r{"alg1-obstruction", {}};
  r.checks.push_back({"Alg1 obstruction", "violated", to_string(find_report(reports, "Alg1").verdict)});
  return r;
}

inline std::vector<std::string> demo_names() {
  return {"lower-cpl5", "coin", "nonstandard", "tilted-coin", "possibility-ni2", "alg1-obstruction"};
}

/// Runs one demo by name; throws PreconditionError for an unknown name.
inline DemoResult run_demo(const std::string& name) {
  if (name == "lower-cpl5") return demo_lower_cpl5();
  if (name == "coin") return demo_coin();
  if (name == "nonstandard") return demo_nonstandard();
  if (name == "tilted-coin") return demo_tilted_coin();
  if (name == "possibility-ni2") return demo_possibility_ni2();
  if (name == "alg1-obstruction") return demo_alg1_obstruction();
  throw PreconditionError("unknown demo '" + name + "'");
}

}  // namespace plausible::demos
