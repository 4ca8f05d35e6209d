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
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "plausible/domains/interval.hpp"
#include "plausible/domains/plp.hpp"
#include "plausible/domains/possibility.hpp"
#include "plausible/domains/probability.hpp"
#include "plausible/domains/ranking.hpp"
#include "plausible/measures.hpp"
#include "plausible/rational.hpp"
#include "plausible/worlds.hpp"

namespace plausible {

/// Seeded generator used throughout. Distributions are hand-rolled on top
/// of the raw engine output so results do not depend on the standard
/// library implementation.
using Rng = std::mt19937_64;

inline std::uint64_t below(Rng& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }
inline bool coin(Rng& rng, std::uint64_t one_in) { return below(rng, one_in) == 0; }

/// p/q with q in 1..max_den, uniform over the admissible numerators.
inline Rational random_unit_rational(Rng& rng, long max_den = 8) {
  long q = 1 + static_cast<long>(below(rng, static_cast<std::uint64_t>(max_den)));
  long p = static_cast<long>(below(rng, static_cast<std::uint64_t>(q + 1)));
  return rational(p, q);
}

// ---- value grids -----------------------------------------------------------

inline std::vector<Rational> unit_grid() {
  return {0, rational(1, 4), rational(1, 3), rational(1, 2), rational(2, 3), rational(3, 4), 1};
}

inline std::vector<Rational> value_grid(const ProbabilityDomain&) { return unit_grid(); }
inline std::vector<Rational> value_grid(const UnitIntervalDomain&) { return unit_grid(); }
inline std::vector<Rational> value_grid(const PossibilityDomain&) {
  return {0, rational(1, 4), rational(1, 3), rational(1, 2), rational(3, 4), 1};
}
inline std::vector<Rank> value_grid(const RankingDomain&) {
  return {Rank(0), Rank(1), Rank(2), Rank(3), Rank(4), Rank::infinity()};
}
inline std::vector<IntervalValue> value_grid(const IntervalDomain&) {
  std::vector<IntervalValue> out;
  std::vector<Rational> pts = {0, rational(1, 4), rational(1, 2), rational(3, 4), 1};
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i; j < pts.size(); ++j) out.push_back({pts[i], pts[j]});
  return out;
}

inline std::vector<PlpValue> value_grid(const PlpDomain& d) {
  const std::size_t k = d.index_count();
  std::vector<PlpEntry> alphabet;
  if (k <= 2) {
    alphabet = {Rational(0), rational(1, 4), rational(1, 2), rational(3, 4), Rational(1), std::nullopt};
  } else {
    alphabet = {Rational(0), rational(1, 2), Rational(1), std::nullopt};
  }
  std::set<PlpValue> seen = {PlpValue::bottom(), PlpValue::top()};
  if (k <= 3) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= alphabet.size();
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<PlpEntry> entries(k);
      std::size_t c = code;
      bool any = false;
      for (std::size_t i = 0; i < k; ++i) {
        entries[i] = alphabet[c % alphabet.size()];
        any = any || entries[i].has_value();
        c /= alphabet.size();
      }
      if (any) seen.insert(PlpValue::from_entries(std::move(entries)));
    }
  } else {
    Rng rng(0x51ab1e + k);
    while (seen.size() < 40) {
      std::vector<PlpEntry> entries(k);
      bool any = false;
      for (auto& e : entries) {
        e = alphabet[below(rng, alphabet.size())];
        any = any || e.has_value();
      }
      if (any) seen.insert(PlpValue::from_entries(std::move(entries)));
    }
  }
  return {seen.begin(), seen.end()};
}

// ---- random values ---------------------------------------------------------

inline Rational random_value(const ProbabilityDomain&, Rng& rng) { return random_unit_rational(rng); }
inline Rational random_value(const UnitIntervalDomain&, Rng& rng) { return random_unit_rational(rng); }
inline Rational random_value(const PossibilityDomain&, Rng& rng) { return random_unit_rational(rng); }
inline Rank random_value(const RankingDomain&, Rng& rng) {
  if (coin(rng, 6)) return Rank::infinity();
  return Rank(below(rng, 6));
}
inline PlpValue random_value(const PlpDomain& d, Rng& rng) {
  if (coin(rng, 8)) return PlpValue::bottom();
  if (coin(rng, 8)) return PlpValue::top();
  while (true) {
    std::vector<PlpEntry> entries(d.index_count());
    bool any = false;
    for (auto& e : entries) {
      if (!coin(rng, 5)) {
        e = random_unit_rational(rng);
        any = true;
      }
    }
    if (any) return PlpValue::from_entries(std::move(entries));
  }
}

// ---- random measures -------------------------------------------------------

/// Weights with small denominators; roughly one world in `zero_one_in`
/// gets weight 0 (at least one world keeps positive weight).
inline ProbabilityMeasure random_probability_measure(const WorldSpace& space, Rng& rng, std::uint64_t zero_one_in = 4) {
  std::vector<long> raw(space.size());
  long total = 0;
  for (auto& r : raw) {
    r = (zero_one_in > 0 && coin(rng, zero_one_in)) ? 0 : 1 + static_cast<long>(below(rng, 6));
    total += r;
  }
  if (total == 0) {
    raw[below(rng, raw.size())] = 1;
    total = 1;
  }
  std::vector<Rational> w;
  for (auto r : raw) w.push_back(rational(r, total));
  return {space, std::move(w)};
}

inline RankingFunction random_ranking_function(const WorldSpace& space, Rng& rng) {
  std::vector<Rank> ranks(space.size());
  for (auto& r : ranks) r = coin(rng, 5) ? Rank::infinity() : Rank(below(rng, 5));
  ranks[below(rng, ranks.size())] = Rank(0);
  std::uint64_t m = UINT64_MAX;
  for (const auto& r : ranks)
    if (!r.is_infinite()) m = std::min(m, r.value());
  for (auto& r : ranks)
    if (!r.is_infinite()) r = Rank(r.value() - m);
  return {space, std::move(ranks)};
}

inline PossibilityMeasure random_possibility_measure(const WorldSpace& space, Rng& rng, PossibilityConditioning mode) {
  static const std::vector<Rational> levels = {0, rational(1, 4), rational(1, 3), rational(1, 2), rational(3, 4), 1};
  std::vector<Rational> deg(space.size());
  for (auto& d : deg) d = levels[below(rng, levels.size())];
  deg[below(rng, deg.size())] = 1;
  return {space, std::move(deg), mode};
}

inline ProbabilitySet random_probability_set(const WorldSpace& space, std::size_t members, Rng& rng,
                                             std::uint64_t zero_one_in = 3) {
  std::vector<ProbabilityMeasure> ms;
  for (std::size_t i = 0; i < members; ++i) ms.push_back(random_probability_measure(space, rng, zero_one_in));
  return {space, std::move(ms)};
}

}  // namespace plausible
