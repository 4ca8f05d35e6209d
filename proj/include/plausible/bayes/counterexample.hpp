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
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "plausible/bayes/construct.hpp"
#include "plausible/bayes/dag.hpp"
#include "plausible/bayes/dsep.hpp"
#include "plausible/bayes/network.hpp"
#include "plausible/bayes/reconstruct.hpp"
#include "plausible/domain_checks.hpp"
#include "plausible/independence.hpp"
#include "plausible/report.hpp"

namespace plausible::bayes {

/// An active trail together with one directed path to Z for each of its
/// head-to-head nodes (empty when that node is itself in Z).
struct TrailSkeleton {
  std::vector<Node> trail;
  std::vector<std::vector<Node>> paths;
};

namespace detail {

/// All active simple trails from x to y, shortest first, ties broken
/// lexicographically.
inline std::vector<std::vector<Node>> active_trails(const Dag& g, Node x, Node y, const NodeSet& z) {
  auto in_z = membership(g, z);
  auto anc_z = ancestors_of(g, z);
  std::vector<std::vector<Node>> out;
  std::deque<std::vector<Node>> frontier{{x}};
  while (!frontier.empty()) {
    auto trail = std::move(frontier.front());
    frontier.pop_front();
    Node v = trail.back();
    auto next = neighbours(g, v);
    std::sort(next.begin(), next.end());
    for (Node w : next) {
      if (std::find(trail.begin(), trail.end(), w) != trail.end()) continue;
      if (trail.size() >= 2 && !passes(g, trail[trail.size() - 2], v, w, in_z, anc_z)) continue;
      auto longer = trail;
      longer.push_back(w);
      if (w == y)
        out.push_back(std::move(longer));
      else
        frontier.push_back(std::move(longer));
    }
  }
  return out;
}

/// Directed paths from h that end at the first node of Z they meet and
/// avoid `blocked`, shortest first.
inline std::vector<std::vector<Node>> paths_to_z(const Dag& g, Node h, const std::vector<char>& in_z,
                                                 const std::vector<char>& blocked) {
  std::vector<std::vector<Node>> out;
  std::deque<std::vector<Node>> frontier{{h}};
  while (!frontier.empty()) {
    auto path = std::move(frontier.front());
    frontier.pop_front();
    for (Node c : g.children(path.back())) {
      if (blocked[c] || std::find(path.begin(), path.end(), c) != path.end()) continue;
      auto longer = path;
      longer.push_back(c);
      if (in_z[c])
        out.push_back(std::move(longer));
      else
        frontier.push_back(std::move(longer));
    }
  }
  return out;
}

inline bool assign_paths(const Dag& g, const std::vector<Node>& colliders, std::size_t i, const std::vector<char>& in_z,
                         std::vector<char>& blocked, std::vector<std::vector<Node>>& chosen) {
  if (i == colliders.size()) return true;
  Node h = colliders[i];
  if (in_z[h]) {
    chosen.push_back({h});
    if (assign_paths(g, colliders, i + 1, in_z, blocked, chosen)) return true;
    chosen.pop_back();
    return false;
  }
  for (const auto& p : paths_to_z(g, h, in_z, blocked)) {
    for (std::size_t k = 1; k < p.size(); ++k) blocked[p[k]] = 1;
    chosen.push_back(p);
    if (assign_paths(g, colliders, i + 1, in_z, blocked, chosen)) return true;
    chosen.pop_back();
    for (std::size_t k = 1; k < p.size(); ++k) blocked[p[k]] = 0;
  }
  return false;
}

}  // namespace detail

/// The subgraph skeleton behind the completeness construction: a shortest
/// active trail whose head-to-head nodes reach Z by paths that share no
/// node with each other and meet the trail only at their start. Trails are
/// tried shortest first and paths shortest first with backtracking.
inline std::optional<TrailSkeleton> find_skeleton(const Dag& g, Node x, Node y, const NodeSet& z) {
  detail::check_query(g, {x}, {y}, z);
  auto in_z = detail::membership(g, z);
  for (const auto& trail : detail::active_trails(g, x, y, z)) {
    std::vector<Node> colliders;
    for (std::size_t i = 1; i + 1 < trail.size(); ++i)
      if (g.has_edge(trail[i - 1], trail[i]) && g.has_edge(trail[i + 1], trail[i])) colliders.push_back(trail[i]);
    std::vector<char> blocked(g.size(), 0);
    for (Node v : trail) blocked[v] = 1;
    std::vector<std::vector<Node>> paths;
    if (detail::assign_paths(g, colliders, 0, in_z, blocked, paths)) return TrailSkeleton{trail, paths};
  }
  return std::nullopt;
}

/// Network on the edges of the skeleton: parentless nodes get (d, d'),
/// single-parent nodes copy their parent and two-parent nodes take the
/// exclusive or of their parents. nullopt when x and y are d-separated by
/// Z. Throws PreconditionError when the domain offers no rich pair.
template <AlgebraicDomain D>
std::optional<QuantitativeBN<D>> dsep_counterexample(const Dag& dag, const D& domain, Node x, Node y, const NodeSet& z) {
  if (d_separated(dag, {x}, {y}, z)) return std::nullopt;
  auto rich = find_rich_pair(domain, dag.size());
  if (!rich) throw PreconditionError("domain '" + domain.name() + "' has no rich pair");
  auto sk = find_skeleton(dag, x, y, z);
  if (!sk) throw Error("no skeleton found for a d-connected query");
  Dag sub(dag.names());
  for (std::size_t i = 0; i + 1 < sk->trail.size(); ++i) {
    Node a = sk->trail[i], b = sk->trail[i + 1];
    if (dag.has_edge(a, b))
      sub.add_edge(a, b);
    else
      sub.add_edge(b, a);
  }
  for (const auto& p : sk->paths)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) sub.add_edge(p[i], p[i + 1]);

  const auto top = domain.top();
  const auto bot = domain.bottom();
  std::vector<Cpt<value_of<D>>> tables(sub.size());
  for (Node v = 0; v < sub.size(); ++v) {
    const std::size_t k = sub.parents(v).size();
    if (k > 2) throw Error("skeleton node with more than two parents");
    for (std::size_t code = 0; code < (std::size_t{1} << k); ++code) {
      if (k == 0) {
        tables[v].rows.push_back({rich->first, rich->second});
      } else {
        std::size_t bit = k == 1 ? code : ((code >> 1) ^ code) & 1U;
        tables[v].rows.push_back(bit == 0 ? std::array<value_of<D>, 2>{top, bot} : std::array<value_of<D>, 2>{bot, top});
      }
    }
  }
  return QuantitativeBN<D>(domain, std::move(sub), std::move(tables));
}

/// A counterexample is verified when its reconstruction is compatible with
/// `dag` and violates I(x, y | Z).
template <SolvableDomain D>
AxiomReport verify_counterexample(const QuantitativeBN<D>& bn, const Dag& dag, Node x, Node y, const NodeSet& z) {
  auto cps = reconstruct(bn);
  auto c = compatible(cps, dag);
  if (!c)
    return AxiomReport::fail("Dsep.completeness", 1,
                             Witness{}.value("incompatible node", dag.name(*c.failing_node)));
  if (indep_rv(cps, {x}, {y}, VariableSet(z.begin(), z.end())))
    return AxiomReport::fail("Dsep.completeness", 1,
                             Witness{}.value("X", dag.name(x)).value("Y", dag.name(y)).value("Z", dag.format_set(z)).annotate(
                                 "independence holds in the constructed network"));
  return AxiomReport::pass("Dsep.completeness", 1);
}

}  // namespace plausible::bayes
