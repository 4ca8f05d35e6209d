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
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plausible/errors.hpp"
#include "plausible/worlds.hpp"

namespace plausible::bayes {

using Node = std::size_t;
using NodeSet = std::vector<Node>;

/// Directed acyclic graph over named nodes. Node i corresponds to variable
/// i of the binary world space built from the same names.
class Dag {
 public:
  Dag() = default;
  explicit Dag(std::vector<std::string> names) : names_(std::move(names)), parents_(names_.size()), children_(names_.size()) {
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw PreconditionError("duplicate node name");
  }

  /// Nodes X1..Xn.
  static Dag numbered(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
    return Dag(std::move(names));
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Node v) const { return names_.at(v); }

  std::optional<Node> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }
  Node index_of(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw PreconditionError("unknown node '" + std::string(name) + "'");
  }

  bool has_edge(Node a, Node b) const {
    check(a);
    check(b);
    return std::find(children_[a].begin(), children_[a].end(), b) != children_[a].end();
  }

  /// Adds a -> b. Throws PreconditionError on a self loop or a cycle;
  /// adding an existing edge is a no-op.
  void add_edge(Node a, Node b) {
    check(a);
    check(b);
    if (a == b) throw PreconditionError("self loop on '" + names_[a] + "'");
    if (has_edge(a, b)) return;
    if (reaches(b, a)) throw PreconditionError("edge " + names_[a] + " -> " + names_[b] + " closes a cycle");
    children_[a].insert(std::upper_bound(children_[a].begin(), children_[a].end(), b), b);
    parents_[b].insert(std::upper_bound(parents_[b].begin(), parents_[b].end(), a), a);
  }
  void add_edge(std::string_view a, std::string_view b) { add_edge(index_of(a), index_of(b)); }

  const NodeSet& parents(Node v) const { return parents_.at(v); }
  const NodeSet& children(Node v) const { return children_.at(v); }

  std::vector<std::pair<Node, Node>> edges() const {
    std::vector<std::pair<Node, Node>> out;
    for (Node a = 0; a < size(); ++a)
      for (Node b : children_[a]) out.emplace_back(a, b);
    return out;
  }
  std::size_t edge_count() const {
    std::size_t k = 0;
    for (const auto& c : children_) k += c.size();
    return k;
  }

  /// Strict descendants of v.
  NodeSet descendants(Node v) const {
    check(v);
    std::vector<char> seen(size(), 0);
    std::vector<Node> stack(children_[v].begin(), children_[v].end());
    while (!stack.empty()) {
      Node u = stack.back();
      stack.pop_back();
      if (seen[u]) continue;
      seen[u] = 1;
      for (Node c : children_[u]) stack.push_back(c);
    }
    NodeSet out;
    for (Node u = 0; u < size(); ++u)
      if (seen[u]) out.push_back(u);
    return out;
  }

  /// Every node other than v and its descendants.
  NodeSet nondescendants(Node v) const {
    auto des = descendants(v);
    NodeSet out;
    for (Node u = 0; u < size(); ++u)
      if (u != v && !std::binary_search(des.begin(), des.end(), u)) out.push_back(u);
    return out;
  }

  /// Kahn's algorithm taking the smallest ready index first.
  NodeSet topological_order() const {
    std::vector<std::size_t> indegree(size());
    for (Node v = 0; v < size(); ++v) indegree[v] = parents_[v].size();
    std::priority_queue<Node, std::vector<Node>, std::greater<>> ready;
    for (Node v = 0; v < size(); ++v)
      if (indegree[v] == 0) ready.push(v);
    NodeSet out;
    while (!ready.empty()) {
      Node v = ready.top();
      ready.pop();
      out.push_back(v);
      for (Node c : children_[v])
        if (--indegree[c] == 0) ready.push(c);
    }
    return out;
  }

  WorldSpace space() const { return WorldSpace::binary(names_); }

  std::string format_set(const NodeSet& s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ',';
      out += names_.at(s[i]);
    }
    return out + "}";
  }

  friend bool operator==(const Dag&, const Dag&) = default;

 private:
  void check(Node v) const {
    if (v >= size()) throw PreconditionError("node index out of range");
  }

  bool reaches(Node from, Node to) const {
    std::vector<char> seen(size(), 0);
    std::vector<Node> stack{from};
    while (!stack.empty()) {
      Node u = stack.back();
      stack.pop_back();
      if (u == to) return true;
      if (seen[u]) continue;
      seen[u] = 1;
      for (Node c : children_[u]) stack.push_back(c);
    }
    return false;
  }

  std::vector<std::string> names_;
  std::vector<NodeSet> parents_;
  std::vector<NodeSet> children_;
};

}  // namespace plausible::bayes
