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
#include <array>
#include <cstddef>
#include <set>
#include <vector>

#include "plausible/bayes/dag.hpp"
#include "plausible/bayes/network.hpp"
#include "plausible/domains/plp.hpp"
#include "plausible/domains/possibility.hpp"
#include "plausible/domains/probability.hpp"
#include "plausible/domains/ranking.hpp"
#include "plausible/random.hpp"

namespace plausible::bayes {

namespace detail {

template <typename D, typename RowFn>
QuantitativeBN<D> fill_network(const D& d, const Dag& dag, RowFn row) {
  std::vector<Cpt<value_of<D>>> tables(dag.size());
  for (Node v = 0; v < dag.size(); ++v)
    for (std::size_t code = 0; code < (std::size_t{1} << dag.parents(v).size()); ++code)
      tables[v].rows.push_back(row(v));
  return {d, dag, std::move(tables)};
}

}  // namespace detail

// Random cpts that satisfy R1 and R2 for the given domain.

inline QuantitativeBN<ProbabilityDomain> random_network(const ProbabilityDomain& d, const Dag& dag, Rng& rng) {
  return detail::fill_network(d, dag, [&](Node) {
    Rational p = random_unit_rational(rng, 6);
    return std::array<Rational, 2>{p, 1 - p};
  });
}

inline QuantitativeBN<RankingDomain> random_network(const RankingDomain& d, const Dag& dag, Rng& rng) {
  return detail::fill_network(d, dag, [&](Node) {
    Rank r = coin(rng, 5) ? Rank::infinity() : Rank(below(rng, 4));
    return coin(rng, 2) ? std::array<Rank, 2>{Rank(0), r} : std::array<Rank, 2>{r, Rank(0)};
  });
}

/// Product conditioning: one entry of each row is 1. Min conditioning
/// additionally needs the entries below 1 to fall strictly along a
/// topological order, so each node gets its own level; only the last node
/// may use 0.
inline QuantitativeBN<PossibilityDomain> random_network(const PossibilityDomain& d, const Dag& dag, Rng& rng) {
  const std::size_t n = dag.size();
  std::vector<Rational> level(n);
  if (d.conditioning() == PossibilityConditioning::min) {
    std::set<long> picks;
    const long den = 4 * static_cast<long>(n) + 4;
    while (picks.size() < n) picks.insert(1 + static_cast<long>(below(rng, static_cast<std::uint64_t>(den - 1))));
    auto order = dag.topological_order();
    auto it = picks.rbegin();
    for (std::size_t i = 0; i < n; ++i, ++it) level[order[i]] = rational(*it, den);
    if (n > 0 && coin(rng, 3)) level[order[n - 1]] = 0;
  }
  return detail::fill_network(d, dag, [&](Node v) {
    Rational a = d.conditioning() == PossibilityConditioning::min ? (coin(rng, 4) ? Rational(1) : level[v])
                                                                  : random_unit_rational(rng, 6);
    return coin(rng, 2) ? std::array<Rational, 2>{Rational(1), a} : std::array<Rational, 2>{a, Rational(1)};
  });
}

/// Rows are (f, 1 - f) with every entry of f strictly inside (0, 1), or a
/// (top, bottom) pair; such products never need a `*`.
inline QuantitativeBN<PlpDomain> random_network(const PlpDomain& d, const Dag& dag, Rng& rng) {
  static const std::vector<Rational> inner = {rational(1, 4), rational(1, 3), rational(1, 2), rational(2, 3),
                                              rational(3, 4)};
  return detail::fill_network(d, dag, [&](Node) {
    if (coin(rng, 4)) {
      return coin(rng, 2) ? std::array<PlpValue, 2>{d.top(), d.bottom()} : std::array<PlpValue, 2>{d.bottom(), d.top()};
    }
    std::vector<PlpEntry> f, g;
    for (std::size_t i = 0; i < d.index_count(); ++i) {
      Rational x = inner[below(rng, inner.size())];
      f.emplace_back(x);
      g.emplace_back(Rational(1 - x));
    }
    return std::array<PlpValue, 2>{PlpValue::from_entries(f), PlpValue::from_entries(g)};
  });
}

/// A random dag on n nodes: each pair i < j gets the edge i -> j with
/// probability 1/edge_one_in, then node labels are shuffled.
inline Dag random_dag(std::size_t n, Rng& rng, std::uint64_t edge_one_in = 2) {
  std::vector<Node> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Dag g = Dag::numbered(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng, edge_one_in)) g.add_edge(perm[i], perm[j]);
  return g;
}

}  // namespace plausible::bayes
