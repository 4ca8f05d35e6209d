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

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "plausible/cps.hpp"
#include "plausible/domains/interval.hpp"
#include "plausible/domains/lifted.hpp"
#include "plausible/domains/plp.hpp"
#include "plausible/domains/possibility.hpp"
#include "plausible/domains/probability.hpp"
#include "plausible/domains/ranking.hpp"
#include "plausible/measures.hpp"

namespace plausible {

/// mu(U|V) = mu(U n V) / mu(V), conditionable iff mu(V) > 0.
inline Cps<ProbabilityDomain> extend_probability(const ProbabilityMeasure& mu) {
  auto m = std::make_shared<const ProbabilityMeasure>(mu);
  return {ProbabilityDomain{}, mu.space(), [m](const Event& u, const Event& v) -> std::optional<Rational> {
            Rational mv = (*m)(v);
            if (mv == 0) return std::nullopt;
            return Rational((*m)(u & v) / mv);
          }};
}

/// kappa(U|V) = kappa(U n V) - kappa(V), conditionable iff kappa(V) is finite.
inline Cps<RankingDomain> extend_ranking(const RankingFunction& kappa) {
  auto k = std::make_shared<const RankingFunction>(kappa);
  return {RankingDomain{}, kappa.space(), [k](const Event& u, const Event& v) -> std::optional<Rank> {
            Rank kv = (*k)(v);
            if (kv.is_infinite()) return std::nullopt;
            Rank kuv = (*k)(u & v);
            if (kuv.is_infinite()) return Rank::infinity();
            return Rank(kuv.value() - kv.value());
          }};
}

/// Min-based: Poss(U n V) when strictly below Poss(V), else 1.
/// Product-based: Poss(U n V) / Poss(V). Conditionable iff Poss(V) > 0.
inline Cps<PossibilityDomain> extend_possibility(const PossibilityMeasure& poss, PossibilityConditioning mode) {
  auto p = std::make_shared<const PossibilityMeasure>(poss);
  return {PossibilityDomain(mode), poss.space(),
          [p, mode](const Event& u, const Event& v) -> std::optional<Rational> {
            Rational pv = (*p)(v);
            if (pv == 0) return std::nullopt;
            Rational puv = (*p)(u & v);
            if (mode == PossibilityConditioning::product) return Rational(puv / pv);
            return puv < pv ? puv : Rational(1);
          }};
}

inline Cps<PossibilityDomain> extend_possibility(const PossibilityMeasure& poss) {
  return extend_possibility(poss, poss.domain().conditioning());
}

/// Which measures take part in conditioning a set of probabilities on V.
enum class LowerStrictness {
  all_positive,   ///< V conditionable only if every member gives it positive mass
  some_positive,  ///< inf/sup over the members with mu(V) > 0
};

namespace detail {

inline std::optional<IntervalValue> conditional_bounds(const ProbabilitySet& ps, const Event& u, const Event& v,
                                                       LowerStrictness strictness) {
  std::optional<IntervalValue> out;
  for (const auto& mu : ps.members()) {
    Rational mv = mu(v);
    if (mv == 0) {
      if (strictness == LowerStrictness::all_positive) return std::nullopt;
      continue;
    }
    Rational c = mu(u & v) / mv;
    if (!out) {
      out = IntervalValue{c, c};
    } else {
      out->lower = std::min(out->lower, c);
      out->upper = std::max(out->upper, c);
    }
  }
  return out;
}

}  // namespace detail

/// Conditional lower and upper probability as one interval value.
inline Cps<IntervalDomain> extend_lower_upper(const ProbabilitySet& ps, LowerStrictness strictness) {
  auto p = std::make_shared<const ProbabilitySet>(ps);
  return {IntervalDomain{}, ps.space(), [p, strictness](const Event& u, const Event& v) {
            return detail::conditional_bounds(*p, u, v, strictness);
          }};
}

/// Conditional lower probability alone, as a real number.
inline Cps<UnitIntervalDomain> extend_lower_probability(const ProbabilitySet& ps, LowerStrictness strictness) {
  auto p = std::make_shared<const ProbabilitySet>(ps);
  return {UnitIntervalDomain{}, ps.space(),
          [p, strictness](const Event& u, const Event& v) -> std::optional<Rational> {
            auto b = detail::conditional_bounds(*p, u, v, strictness);
            if (!b) return std::nullopt;
            return b->lower;
          }};
}

/// Conditional upper probability alone.
inline Cps<UnitIntervalDomain> extend_upper_probability(const ProbabilitySet& ps, LowerStrictness strictness) {
  auto p = std::make_shared<const ProbabilitySet>(ps);
  return {UnitIntervalDomain{}, ps.space(),
          [p, strictness](const Event& u, const Event& v) -> std::optional<Rational> {
            auto b = detail::conditional_bounds(*p, u, v, strictness);
            if (!b) return std::nullopt;
            return b->upper;
          }};
}

/// The vector-valued representation: entry i is mu_i(U|V), or `*` when
/// mu_i(V) = 0. Undefined when every member gives V mass 0.
inline Cps<PlpDomain> extend_plp(const ProbabilitySet& ps) {
  auto p = std::make_shared<const ProbabilitySet>(ps);
  return {PlpDomain(ps.size()), ps.space(), [p](const Event& u, const Event& v) -> std::optional<PlpValue> {
            auto entries = p->conditional_vector(u, v);
            bool any = false;
            for (const auto& e : entries) any = any || e.has_value();
            if (!any) return std::nullopt;
            return PlpValue::from_entries(std::move(entries));
          }};
}

/// Conditions an arbitrary unconditional measure by tagging Pl(U n V) with
/// V, with fresh bottom and top for the extreme cases.
template <UnconditionalMeasure M>
auto lift_unconditional(const M& pl) {
  using D = std::remove_cvref_t<decltype(pl.domain())>;
  using L = LiftedDomain<D>;
  using V = value_of<L>;
  auto m = std::make_shared<const M>(pl);
  return Cps<L>(L(pl.domain()), pl.space(), [m](const Event& u, const Event& v) -> std::optional<V> {
    const auto& d = m->domain();
    auto pv = (*m)(v);
    if (pv == d.bottom()) return std::nullopt;
    auto puv = (*m)(u & v);
    if (puv == pv) return V::top();
    if (puv == d.bottom()) return V::bottom();
    return V::pair(std::move(puv), v);
  });
}

}  // namespace plausible
