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
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "plausible/bayes/network.hpp"
#include "plausible/cps.hpp"
#include "plausible/domain.hpp"
#include "plausible/errors.hpp"

namespace plausible::bayes {

/// Plausibility of each world under the chain rule, multiplying along a
/// topological order X_1..X_n with later factors on the left:
/// d_{X_n} (x) (... (x) d_{X_1}).
template <AlgebraicDomain D>
std::vector<value_of<D>> joint_values(const QuantitativeBN<D>& bn) {
  const auto& d = bn.domain();
  const std::size_t n = bn.dag().size();
  if (n > 16) throw PreconditionError("reconstruction supports at most 16 nodes");
  auto order = bn.dag().topological_order();
  std::vector<value_of<D>> joint;
  joint.reserve(std::size_t{1} << n);
  for (std::size_t w = 0; w < (std::size_t{1} << n); ++w) {
    value_of<D> acc = d.top();
    for (Node v : order) acc = d.otimes(bn.entry(v, w), acc);
    joint.push_back(std::move(acc));
  }
  return joint;
}

/// The unique standard algebraic cps represented by a representable
/// network: Pl(U) is the (+) of the joint values of the worlds in U, V is
/// conditionable iff Pl(V) is not bottom, and Pl(U|V) is the solution d of
/// d (x) Pl(V) = Pl(U n V). Throws DomainViolatesBn5 when the domain
/// cannot divide where it should.
template <SolvableDomain D>
Cps<D> reconstruct(const QuantitativeBN<D>& bn) {
  auto r = check_representable(bn);
  if (!r.holds()) throw PreconditionError("network is not representable (" + r.axiom + " fails)");
  struct State {
    State(D d, std::vector<value_of<D>> j) : domain(std::move(d)), joint(std::move(j)) {
      if (joint.size() <= 16) cache.resize(std::size_t{1} << joint.size());
    }

    D domain;
    std::vector<value_of<D>> joint;
    // Values already computed, by event mask, when |W| <= 16.
    mutable std::vector<std::optional<value_of<D>>> cache;
    mutable std::mutex lock;

    // On values inside Dom(oplus) the pairwise fold agrees with the n-ary sum.
    value_of<D> fold(const Event& e) const {
      value_of<D> acc = domain.bottom();
      for (auto w : e.worlds()) acc = oplus2(domain, acc, joint[w]);
      return acc;
    }
    value_of<D> unconditional(const Event& e) const {
      if (cache.empty()) return fold(e);
      const auto m = e.to_mask();
      {
        std::lock_guard<std::mutex> g(lock);
        if (cache[m]) return *cache[m];
      }
      auto v = fold(e);
      std::lock_guard<std::mutex> g(lock);
      cache[m] = v;
      return v;
    }
  };
  auto st = std::make_shared<const State>(bn.domain(), joint_values(bn));
  return {bn.domain(), bn.dag().space(), [st](const Event& u, const Event& v) -> std::optional<value_of<D>> {
            auto pv = st->unconditional(v);
            if (pv == st->domain.bottom()) return std::nullopt;
            auto puv = st->unconditional(u & v);
            auto q = st->domain.solve_otimes(puv, pv);
            if (!q)
              throw DomainViolatesBn5("no d with d (x) " + st->domain.format(pv) + " = " + st->domain.format(puv));
            return q;
          }};
}

}  // namespace plausible::bayes
