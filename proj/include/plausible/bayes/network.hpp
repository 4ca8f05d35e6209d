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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plausible/bayes/dag.hpp"
#include "plausible/cps.hpp"
#include "plausible/domain.hpp"
#include "plausible/errors.hpp"
#include "plausible/report.hpp"

namespace plausible::bayes {

/// Conditional plausibility table of one node. rows[code] holds the values
/// for X = 0 and X = 1 given the parent assignment packed into `code`, the
/// first parent (in Dag::parents order) being the most significant bit.
template <typename V>
struct Cpt {
  std::vector<std::array<V, 2>> rows;
};

template <AlgebraicDomain D>
class QuantitativeBN {
 public:
  using value_type = value_of<D>;

  QuantitativeBN(D domain, Dag dag, std::vector<Cpt<value_type>> tables)
      : domain_(std::move(domain)), dag_(std::move(dag)), tables_(std::move(tables)) {
    if (tables_.size() != dag_.size()) throw PreconditionError("one cpt per node is required");
    for (Node v = 0; v < dag_.size(); ++v)
      if (tables_[v].rows.size() != (std::size_t{1} << dag_.parents(v).size()))
        throw PreconditionError("cpt of '" + dag_.name(v) + "' needs " +
                                std::to_string(std::size_t{1} << dag_.parents(v).size()) + " rows");
  }

  const D& domain() const noexcept { return domain_; }
  const Dag& dag() const noexcept { return dag_; }
  const std::vector<Cpt<value_type>>& tables() const noexcept { return tables_; }
  const Cpt<value_type>& table(Node v) const { return tables_.at(v); }

  /// Row index of v's parents in the world with index w of dag().space().
  std::size_t row_of(Node v, std::size_t w) const {
    std::size_t code = 0;
    const std::size_t n = dag_.size();
    for (Node p : dag_.parents(v)) code = (code << 1) | ((w >> (n - 1 - p)) & 1U);
    return code;
  }

  /// d_{X_v, G, w}: the entry of v's cpt selected by world w.
  const value_type& entry(Node v, std::size_t w) const {
    const std::size_t n = dag_.size();
    return tables_[v].rows[row_of(v, w)][(w >> (n - 1 - v)) & 1U];
  }

 private:
  D domain_;
  Dag dag_;
  std::vector<Cpt<value_type>> tables_;
};

namespace detail {

/// First violation of R2 along `order`, as (j, k, world, left, right).
template <AlgebraicDomain D>
std::optional<Witness> r2_violation(const QuantitativeBN<D>& bn, const std::vector<Node>& order, std::size_t& checked) {
  const auto& d = bn.domain();
  const std::size_t n = order.size();
  std::vector<value_of<D>> f(n);
  std::vector<std::vector<value_of<D>>> prod(n, std::vector<value_of<D>>(n, d.bottom()));
  for (std::size_t w = 0; w < (std::size_t{1} << n); ++w) {
    for (std::size_t i = 0; i < n; ++i) f[i] = bn.entry(order[i], w);
    // prod[k][j] = d_k (x) (d_{k-1} (x) ... (x) d_j); otimes is total on
    // every built-in domain, Dom(otimes) only restricts where it is meaningful.
    for (std::size_t j = 0; j < n; ++j) {
      prod[j][j] = f[j];
      for (std::size_t k = j + 1; k < n; ++k) prod[k][j] = d.otimes(f[k], prod[k - 1][j]);
    }
    for (std::size_t k = 1; k < n; ++k)
      for (std::size_t j = 0; j < k; ++j) {
        checked += 2;
        const value_of<D>* a = nullptr;
        const value_of<D>* b = nullptr;
        if (!d.in_dom_otimes(f[k], prod[k - 1][j])) {
          a = &f[k];
          b = &prod[k - 1][j];
        } else if (!d.in_dom_otimes(prod[k][j + 1], f[j])) {
          a = &prod[k][j + 1];
          b = &f[j];
        }
        if (a) {
          std::string names;
          for (Node v : order) names += (names.empty() ? "" : ",") + bn.dag().name(v);
          return Witness{}
              .value("order", names)
              .value("j", std::to_string(j + 1))
              .value("k", std::to_string(k + 1))
              .value("world", bn.dag().space().world_name(w))
              .value("left", d.format(*a))
              .value("right", d.format(*b));
        }
      }
  }
  return std::nullopt;
}

}  // namespace detail

/// R1 for every row, and R2 for every world and every 1 <= j < k <= n over
/// a topological order X_1..X_n, with products taken later-on-the-left as
/// in the chain rule: (d_k, d_{k-1} (x) ... (x) d_j) and
/// (d_k (x) ... (x) d_{j+1}, d_j) must lie in Dom(otimes). R2 is met when
/// some topological order satisfies it; orders are tried in lexicographic
/// order, at most `max_orders` of them, and a failure reports the first.
template <AlgebraicDomain D>
AxiomReport check_representable(const QuantitativeBN<D>& bn, std::size_t max_orders = 5040) {
  const auto& d = bn.domain();
  const auto& g = bn.dag();
  std::size_t r1 = 0;
  for (Node v = 0; v < g.size(); ++v)
    for (std::size_t code = 0; code < bn.table(v).rows.size(); ++code) {
      const auto& row = bn.table(v).rows[code];
      ++r1;
      bool ok = d.in_carrier(row[0]) && d.in_carrier(row[1]) && in_dom_oplus2(d, row[0], row[1]) &&
                oplus2(d, row[0], row[1]) == d.top();
      if (!ok)
        return AxiomReport::fail("R1", r1,
                                 Witness{}
                                     .value("node", g.name(v))
                                     .value("row", std::to_string(code))
                                     .value("d0", d.format(row[0]))
                                     .value("d1", d.format(row[1])));
    }
  const std::size_t n = g.size();
  if (n > 12) throw PreconditionError("R2 is checked for at most 12 nodes");

  std::size_t checked = 0, tried = 0;
  std::optional<Witness> first;
  bool found = false, capped = false;
  std::vector<Node> order;
  std::vector<std::size_t> missing(n);
  for (Node v = 0; v < n; ++v) missing[v] = g.parents(v).size();
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self) -> void {
    if (found || capped) return;
    if (order.size() == n) {
      if (tried++ == max_orders) {
        capped = true;
        return;
      }
      auto bad = detail::r2_violation(bn, order, checked);
      if (!bad)
        found = true;
      else if (!first)
        first = std::move(bad);
      return;
    }
    for (Node v = 0; v < n && !found && !capped; ++v) {
      if (used[v] || missing[v] != 0) continue;
      used[v] = 1;
      order.push_back(v);
      for (Node c : g.children(v)) --missing[c];
      self(self);
      for (Node c : g.children(v)) ++missing[c];
      order.pop_back();
      used[v] = 0;
    }
  };
  extend(extend);
  if (found) return AxiomReport::pass("R2", r1 + checked);
  if (capped) return {"R2", Verdict::inconclusive, r1 + checked, std::move(first)};
  return AxiomReport::fail("R2", r1 + checked, std::move(*first));
}

/// Reads the cpts of `dag` off a cps over the same binary variables: rows
/// whose parent assignment is not conditionable get (top, bottom).
template <AlgebraicDomain D>
QuantitativeBN<D> extract_cpts(const Cps<D>& cps, const Dag& dag) {
  const auto& s = cps.space();
  if (s.variables() != dag.names()) throw PreconditionError("dag nodes must match the cps variables");
  const auto& d = cps.domain();
  std::vector<Cpt<value_of<D>>> tables(dag.size());
  for (Node v = 0; v < dag.size(); ++v) {
    const auto& par = dag.parents(v);
    for (std::size_t code = 0; code < (std::size_t{1} << par.size()); ++code) {
      Event cond = s.assignment_code(par, code);
      if (!cps.conditionable(cond))
        tables[v].rows.push_back({d.top(), d.bottom()});
      else
        tables[v].rows.push_back({cps.at(s.assignment(v, 0), cond), cps.at(s.assignment(v, 1), cond)});
    }
  }
  return {d, dag, std::move(tables)};
}

}  // namespace plausible::bayes
