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
#include <vector>

#include "plausible/bayes/dag.hpp"
#include "plausible/cps.hpp"
#include "plausible/errors.hpp"
#include "plausible/independence.hpp"

namespace plausible::bayes {

struct Compatibility {
  bool holds = true;
  std::optional<Node> failing_node;
  explicit operator bool() const noexcept { return holds; }
};

/// Each node is independent of its nondescendants given its parents.
template <PlausibilityDomain D>
Compatibility compatible(const Cps<D>& cps, const Dag& dag) {
  if (cps.space().variables() != dag.names()) throw PreconditionError("dag nodes must match the cps variables");
  for (Node v = 0; v < dag.size(); ++v) {
    const auto& par = dag.parents(v);
    VariableSet rest;
    for (Node u : dag.nondescendants(v))
      if (!std::binary_search(par.begin(), par.end(), u)) rest.push_back(u);
    if (!indep_rv(cps, {v}, rest, VariableSet(par.begin(), par.end()))) return {false, v};
  }
  return {};
}

/// For each Y_k in `ordering`, the parents are a minimal P among the
/// earlier variables with I(Y_k, earlier - P | P). Candidates are tried by
/// size and then lexicographically by position in the ordering.
template <PlausibilityDomain D>
Dag construct_bn(const Cps<D>& cps, const std::vector<Node>& ordering) {
  const auto& s = cps.space();
  const std::size_t n = s.variable_count();
  auto sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) sorted.clear();
  if (ordering.size() != n || sorted.size() != n) throw PreconditionError("ordering must be a permutation of the variables");
  Dag dag(s.variables());
  for (std::size_t k = 0; k < n; ++k) {
    const Node y = ordering[k];
    std::optional<std::vector<std::size_t>> chosen;
    for (std::size_t size = 0; size <= k && !chosen; ++size) {
      // positions 0..k-1 choose `size`, in lexicographic order
      std::vector<std::size_t> pick(size);
      for (std::size_t i = 0; i < size; ++i) pick[i] = i;
      while (true) {
        VariableSet p, rest;
        std::size_t t = 0;
        for (std::size_t i = 0; i < k; ++i) {
          if (t < size && pick[t] == i) {
            p.push_back(ordering[i]);
            ++t;
          } else {
            rest.push_back(ordering[i]);
          }
        }
        std::sort(p.begin(), p.end());
        std::sort(rest.begin(), rest.end());
        if (indep_rv(cps, {y}, rest, p)) {
          chosen = pick;
          break;
        }
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == k - size + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    for (auto pos : *chosen) dag.add_edge(ordering[pos], y);
  }
  return dag;
}

}  // namespace plausible::bayes
