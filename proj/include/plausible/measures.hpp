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

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "plausible/domain.hpp"
#include "plausible/domains/interval.hpp"
#include "plausible/domains/plp.hpp"
#include "plausible/domains/possibility.hpp"
#include "plausible/domains/probability.hpp"
#include "plausible/domains/ranking.hpp"
#include "plausible/errors.hpp"
#include "plausible/event.hpp"
#include "plausible/rational.hpp"
#include "plausible/worlds.hpp"

namespace plausible {

/// Anything that assigns a plausibility to every event of a finite space.
template <typename M>
concept UnconditionalMeasure = requires(const M& m, const Event& e) {
  requires PlausibilityDomain<std::remove_cvref_t<decltype(m.domain())>>;
  { m.space() } -> std::convertible_to<const WorldSpace&>;
  { m(e) } -> std::convertible_to<value_of<std::remove_cvref_t<decltype(m.domain())>>>;
};

/// An unconditional measure given by an arbitrary function of events.
template <PlausibilityDomain D>
class FunctionMeasure {
 public:
  using value_type = value_of<D>;

  FunctionMeasure(D domain, WorldSpace space, std::function<value_type(const Event&)> f)
      : domain_(std::move(domain)), space_(std::move(space)), f_(std::move(f)) {}

  /// Values listed by event bitmask (bit w set iff world w is in the event).
  static FunctionMeasure tabulated(D domain, WorldSpace space, std::vector<value_type> by_mask) {
    if (space.size() > 20 || by_mask.size() != (std::size_t{1} << space.size()))
      throw PreconditionError("table must list every event");
    return FunctionMeasure(std::move(domain), std::move(space),
                           [t = std::move(by_mask)](const Event& e) { return t[e.to_mask()]; });
  }

  const D& domain() const noexcept { return domain_; }
  const WorldSpace& space() const noexcept { return space_; }
  value_type operator()(const Event& e) const { return f_(e); }

 private:
  D domain_;
  WorldSpace space_;
  std::function<value_type(const Event&)> f_;
};

/// A probability measure given by world weights summing to 1.
class ProbabilityMeasure {
 public:
  ProbabilityMeasure(WorldSpace space, std::vector<Rational> weights)
      : space_(std::move(space)), weights_(std::move(weights)) {
    if (weights_.size() != space_.size()) throw MalformedMeasure("one weight per world is required");
    Rational total = 0;
    for (auto& w : weights_) {
      w.canonicalize();
      if (w < 0) throw MalformedMeasure("negative probability weight");
      total += w;
    }
    if (total != 1) throw MalformedMeasure("probability weights sum to " + to_string(total) + ", not 1");
  }

  ProbabilityDomain domain() const { return {}; }
  const WorldSpace& space() const noexcept { return space_; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  const Rational& weight(std::size_t w) const { return weights_.at(w); }

  Rational operator()(const Event& e) const {
    Rational sum = 0;
    for (auto w : e.worlds()) sum += weights_.at(w);
    return sum;
  }

 private:
  WorldSpace space_;
  std::vector<Rational> weights_;
};

/// A ranking function given by ranks of worlds with minimum 0.
class RankingFunction {
 public:
  RankingFunction(WorldSpace space, std::vector<Rank> ranks) : space_(std::move(space)), ranks_(std::move(ranks)) {
    if (ranks_.size() != space_.size()) throw MalformedMeasure("one rank per world is required");
    if (*std::min_element(ranks_.begin(), ranks_.end()) != Rank(0))
      throw MalformedMeasure("some world must have rank 0");
  }

  RankingDomain domain() const { return {}; }
  const WorldSpace& space() const noexcept { return space_; }
  const std::vector<Rank>& ranks() const noexcept { return ranks_; }

  Rank operator()(const Event& e) const {
    Rank m = Rank::infinity();
    for (auto w : e.worlds()) m = std::min(m, ranks_.at(w));
    return m;
  }

 private:
  WorldSpace space_;
  std::vector<Rank> ranks_;
};

/// A possibility measure given by world possibilities with maximum 1.
class PossibilityMeasure {
 public:
  PossibilityMeasure(WorldSpace space, std::vector<Rational> degrees,
                     PossibilityConditioning mode = PossibilityConditioning::min)
      : space_(std::move(space)), degrees_(std::move(degrees)), mode_(mode) {
    if (degrees_.size() != space_.size()) throw MalformedMeasure("one degree per world is required");
    for (auto& d : degrees_) {
      d.canonicalize();
      if (d < 0 || d > 1) throw MalformedMeasure("possibility degree outside [0,1]");
    }
    if (*std::max_element(degrees_.begin(), degrees_.end()) != 1)
      throw MalformedMeasure("some world must have possibility 1");
  }

  PossibilityDomain domain() const { return PossibilityDomain(mode_); }
  const WorldSpace& space() const noexcept { return space_; }
  const std::vector<Rational>& degrees() const noexcept { return degrees_; }

  Rational operator()(const Event& e) const {
    Rational m = 0;
    for (auto w : e.worlds()) m = std::max(m, degrees_.at(w));
    return m;
  }

 private:
  WorldSpace space_;
  std::vector<Rational> degrees_;
  PossibilityConditioning mode_;
};

/// A finite indexed family of probability measures on one space.
class ProbabilitySet {
 public:
  ProbabilitySet(WorldSpace space, std::vector<ProbabilityMeasure> members)
      : space_(std::move(space)), members_(std::move(members)) {
    if (members_.empty()) throw MalformedMeasure("a set of probability measures needs a member");
    for (const auto& m : members_)
      if (!(m.space() == space_)) throw MalformedMeasure("member measure over a different space");
  }

  /// Members given as weight vectors.
  static ProbabilitySet from_weights(WorldSpace space, const std::vector<std::vector<Rational>>& weights) {
    std::vector<ProbabilityMeasure> ms;
    for (const auto& w : weights) ms.emplace_back(space, w);
    return ProbabilitySet(std::move(space), std::move(ms));
  }

  const WorldSpace& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<ProbabilityMeasure>& members() const noexcept { return members_; }
  const ProbabilityMeasure& member(std::size_t i) const { return members_.at(i); }

  Rational lower(const Event& e) const {
    Rational m = 1;
    for (const auto& mu : members_) m = std::min(m, mu(e));
    return m;
  }

  Rational upper(const Event& e) const {
    Rational m = 0;
    for (const auto& mu : members_) m = std::max(m, mu(e));
    return m;
  }

  /// The vector (mu_i(e))_i as a plp value.
  PlpValue plp(const Event& e) const {
    std::vector<PlpEntry> entries;
    for (const auto& mu : members_) entries.emplace_back(mu(e));
    return PlpValue::from_entries(std::move(entries));
  }

  /// The raw conditional vector: mu_i(U|V) where mu_i(V) > 0, `*` elsewhere,
  /// before any collapsing to bottom or top.
  std::vector<PlpEntry> conditional_vector(const Event& u, const Event& v) const {
    std::vector<PlpEntry> entries;
    for (const auto& mu : members_) {
      Rational mv = mu(v);
      if (mv > 0) {
        entries.emplace_back(Rational(mu(u & v) / mv));
      } else {
        entries.emplace_back();
      }
    }
    return entries;
  }

  FunctionMeasure<PlpDomain> plp_measure() const {
    return {PlpDomain(size()), space_, [self = *this](const Event& e) { return self.plp(e); }};
  }
  FunctionMeasure<UnitIntervalDomain> lower_measure() const {
    return {UnitIntervalDomain{}, space_, [self = *this](const Event& e) { return self.lower(e); }};
  }
  FunctionMeasure<IntervalDomain> interval_measure() const {
    return {IntervalDomain{}, space_,
            [self = *this](const Event& e) { return IntervalValue{self.lower(e), self.upper(e)}; }};
  }

 private:
  WorldSpace space_;
  std::vector<ProbabilityMeasure> members_;
};

}  // namespace plausible
