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
#include <deque>
#include <optional>
#include <vector>

#include "plausible/bayes/dag.hpp"
#include "plausible/errors.hpp"

namespace plausible::bayes {

namespace detail {

inline void check_query(const Dag& g, const NodeSet& x, const NodeSet& y, const NodeSet& z) {
  if (x.empty() || y.empty()) throw PreconditionError("d-separation needs nonempty X and Y");
  std::vector<int> seen(g.size(), 0);
  for (const auto* s : {&x, &y, &z})
    for (Node v : *s) {
      if (v >= g.size()) throw PreconditionError("node index out of range");
      if (seen[v]++) throw PreconditionError("X, Y and Z must be pairwise disjoint");
    }
}

inline std::vector<char> membership(const Dag& g, const NodeSet& s) {
  std::vector<char> in(g.size(), 0);
  for (Node v : s) in[v] = 1;
  return in;
}

/// Nodes that are in Z or have a descendant in Z.
inline std::vector<char> ancestors_of(const Dag& g, const NodeSet& z) {
  std::vector<char> anc(g.size(), 0);
  std::vector<Node> stack(z.begin(), z.end());
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    if (anc[v]) continue;
    anc[v] = 1;
    for (Node p : g.parents(v)) stack.push_back(p);
  }
  return anc;
}

/// Whether the interior node `mid` lets the trail prev - mid - next through.
inline bool passes(const Dag& g, Node prev, Node mid, Node next, const std::vector<char>& in_z,
                   const std::vector<char>& anc_z) {
  bool collider = g.has_edge(prev, mid) && g.has_edge(next, mid);
  return collider ? anc_z[mid] != 0 : in_z[mid] == 0;
}

inline std::vector<Node> neighbours(const Dag& g, Node v) {
  std::vector<Node> out(g.parents(v).begin(), g.parents(v).end());
  out.insert(out.end(), g.children(v).begin(), g.children(v).end());
  return out;
}

}  // namespace detail

/// Reference implementation: enumerate every simple trail from each x to
/// each y and test each interior node against the three blocking clauses.
inline bool d_separated_by_trails(const Dag& g, const NodeSet& x, const NodeSet& y, const NodeSet& z) {
  detail::check_query(g, x, y, z);
  auto in_z = detail::membership(g, z);
  auto in_y = detail::membership(g, y);
  auto anc_z = detail::ancestors_of(g, z);
  std::vector<char> on_trail(g.size(), 0);
  std::vector<Node> trail;
  bool found = false;

  auto dfs = [&](auto&& self, Node v) -> void {
    if (found) return;
    if (trail.size() >= 2 && in_y[v]) {
      found = true;
      return;
    }
    for (Node w : detail::neighbours(g, v)) {
      if (on_trail[w]) continue;
      // v becomes interior once w is appended; test it against its predecessor.
      if (trail.size() >= 2 && !detail::passes(g, trail[trail.size() - 2], v, w, in_z, anc_z)) continue;
      on_trail[w] = 1;
      trail.push_back(w);
      self(self, w);
      trail.pop_back();
      on_trail[w] = 0;
      if (found) return;
    }
  };

  for (Node s : x) {
    trail = {s};
    on_trail.assign(g.size(), 0);
    on_trail[s] = 1;
    for (Node w : detail::neighbours(g, s)) {
      if (in_y[w]) return false;
      on_trail[w] = 1;
      trail.push_back(w);
      dfs(dfs, w);
      trail.pop_back();
      on_trail[w] = 0;
      if (found) return false;
    }
  }
  return true;
}

/// Linear-time reachability over (node, direction) states: a ball arriving
/// from a child moves on unless the node is in Z; one arriving from a parent
/// continues down when the node is outside Z and bounces up when the node
/// or one of its descendants is in Z.
inline bool d_separated_by_reachability(const Dag& g, const NodeSet& x, const NodeSet& y, const NodeSet& z) {
  detail::check_query(g, x, y, z);
  auto in_z = detail::membership(g, z);
  auto in_y = detail::membership(g, y);
  auto anc_z = detail::ancestors_of(g, z);
  enum : int { up = 0, down = 1 };
  std::vector<char> visited(2 * g.size(), 0);
  std::deque<std::pair<Node, int>> queue;
  for (Node s : x) queue.emplace_back(s, up);
  while (!queue.empty()) {
    auto [v, dir] = queue.front();
    queue.pop_front();
    if (visited[2 * v + dir]) continue;
    visited[2 * v + dir] = 1;
    if (!in_z[v] && in_y[v]) return false;
    if (dir == up) {
      if (in_z[v]) continue;
      for (Node p : g.parents(v)) queue.emplace_back(p, up);
      for (Node c : g.children(v)) queue.emplace_back(c, down);
    } else {
      if (!in_z[v])
        for (Node c : g.children(v)) queue.emplace_back(c, down);
      if (anc_z[v])
        for (Node p : g.parents(v)) queue.emplace_back(p, up);
    }
  }
  return true;
}

inline bool d_separated(const Dag& g, const NodeSet& x, const NodeSet& y, const NodeSet& z) {
  return d_separated_by_reachability(g, x, y, z);
}

/// A shortest active simple trail from x to y given Z, found breadth-first
/// over partial trails; ties go to the trail whose node sequence is
/// lexicographically smallest. nullopt when x and y are d-separated.
inline std::optional<std::vector<Node>> find_active_trail(const Dag& g, Node x, Node y, const NodeSet& z) {
  detail::check_query(g, {x}, {y}, z);
  auto in_z = detail::membership(g, z);
  auto anc_z = detail::ancestors_of(g, z);
  std::deque<std::vector<Node>> frontier{{x}};
  while (!frontier.empty()) {
    auto trail = std::move(frontier.front());
    frontier.pop_front();
    Node v = trail.back();
    auto next = detail::neighbours(g, v);
    std::sort(next.begin(), next.end());
    for (Node w : next) {
      if (std::find(trail.begin(), trail.end(), w) != trail.end()) continue;
      if (trail.size() >= 2 && !detail::passes(g, trail[trail.size() - 2], v, w, in_z, anc_z)) continue;
      auto longer = trail;
      longer.push_back(w);
      if (w == y) return longer;
      frontier.push_back(std::move(longer));
    }
  }
  return std::nullopt;
}

}  // namespace plausible::bayes
