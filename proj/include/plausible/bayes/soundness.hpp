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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "plausible/bayes/dag.hpp"
#include "plausible/bayes/dsep.hpp"
#include "plausible/bayes/random_network.hpp"
#include "plausible/bayes/reconstruct.hpp"
#include "plausible/independence.hpp"
#include "plausible/report.hpp"

namespace plausible::bayes {

struct Query {
  NodeSet x, y, z;
};

/// Every (X, Y, Z) of pairwise disjoint node sets with X and Y nonempty.
inline std::vector<Query> all_queries(std::size_t n) {
  std::vector<Query> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    Query q;
    std::size_t c = code;
    for (Node v = 0; v < n; ++v, c /= 4) {
      switch (c % 4) {
        case 1: q.x.push_back(v); break;
        case 2: q.y.push_back(v); break;
        case 3: q.z.push_back(v); break;
        default: break;
      }
    }
    if (!q.x.empty() && !q.y.empty()) out.push_back(std::move(q));
  }
  return out;
}

/// Random query with X and Y nonempty.
inline Query random_query(std::size_t n, Rng& rng) {
  if (n < 2) throw PreconditionError("queries need at least two nodes");
  while (true) {
    Query q;
    for (Node v = 0; v < n; ++v) {
      switch (below(rng, 4)) {
        case 1: q.x.push_back(v); break;
        case 2: q.y.push_back(v); break;
        case 3: q.z.push_back(v); break;
        default: break;
      }
    }
    if (!q.x.empty() && !q.y.empty()) return q;
  }
}

/// For `trials` random representable networks over `dag`, every
/// d-separated query must be an independence of the reconstruction. All
/// queries are checked up to 5 nodes, 200 random ones per trial beyond.
template <SolvableDomain D>
AxiomReport dsep_soundness_check(const Dag& dag, const D& domain, std::size_t trials, std::uint64_t seed = 1) {
  const std::size_t n = dag.size();
  Rng rng(seed);
  std::vector<Query> fixed;
  if (n <= 5) {
    for (auto& q : all_queries(n))
      if (d_separated(dag, q.x, q.y, q.z)) fixed.push_back(std::move(q));
  }
  std::size_t instances = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    auto bn = random_network(domain, dag, rng);
    auto cps = reconstruct(bn);
    std::vector<Query> queries = fixed;
    if (n > 5) {
      for (std::size_t i = 0; i < 200; ++i) {
        auto q = random_query(n, rng);
        if (d_separated(dag, q.x, q.y, q.z)) queries.push_back(std::move(q));
      }
    }
    for (const auto& q : queries) {
      ++instances;
      if (!indep_rv(cps, q.x, q.y, q.z))
        return AxiomReport::fail("Dsep.soundness", instances,
                                 Witness{}
                                     .value("trial", std::to_string(t))
                                     .value("X", dag.format_set(q.x))
                                     .value("Y", dag.format_set(q.y))
                                     .value("Z", dag.format_set(q.z)));
    }
  }
  return AxiomReport::pass("Dsep.soundness", instances);
}

}  // namespace plausible::bayes
