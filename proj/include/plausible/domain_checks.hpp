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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "plausible/axioms.hpp"
#include "plausible/domain.hpp"
#include "plausible/errors.hpp"
#include "plausible/random.hpp"
#include "plausible/report.hpp"

namespace plausible {

namespace detail {

/// Iterates index tuples of length K over a value list: all of them when
/// there are at most `budget`, otherwise `budget` seeded random ones.
template <std::size_t K, typename F>
void for_index_tuples(std::size_t n, std::size_t budget, std::uint64_t seed, F f) {
  std::size_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < K && small; ++i) {
    if (total > budget / std::max<std::size_t>(n, 1)) small = false;
    total *= n;
  }
  std::array<std::size_t, K> t{};
  if (n == 0) return;
  if (small && total <= budget) {
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < K; ++i) {
        t[i] = c % n;
        c /= n;
      }
      if (!f(t)) return;
    }
  } else {
    Rng rng(seed);
    for (std::size_t k = 0; k < budget; ++k) {
      for (auto& x : t) x = below(rng, n);
      if (!f(t)) return;
    }
  }
}

template <typename V>
std::vector<std::vector<V>> permutations_of(const std::vector<V>& xs) {
  std::vector<std::size_t> idx(xs.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<std::vector<V>> out;
  do {
    std::vector<V> p;
    for (auto i : idx) p.push_back(xs[i]);
    out.push_back(std::move(p));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace detail

/// Candidate values for domain-level checks: the domain's grid plus a few
/// seeded random values.
template <AlgebraicDomain D>
std::vector<value_of<D>> domain_sample(const D& d, std::size_t extra, std::uint64_t seed) {
  std::set<value_of<D>> s;
  for (auto& v : value_grid(d)) s.insert(v);
  Rng rng(seed);
  for (std::size_t i = 0; i < extra; ++i) s.insert(random_value(d, rng));
  s.insert(d.bottom());
  s.insert(d.top());
  return {s.begin(), s.end()};
}

/// BN1-BN8 over value grids (exhaustive for short tuples, seeded random
/// tuples past `sample_budget`). BN5 uses the domain's division solver and
/// throws ConfigurationError when there is none.
template <AlgebraicDomain D>
std::vector<AxiomReport> check_bn_compatible(const D& d, std::size_t sample_budget = 20000,
                                             const std::vector<value_of<D>>& values = {}, std::uint64_t seed = 7) {
  using V = value_of<D>;
  const std::vector<V> xs = values.empty() ? domain_sample(d, 6, seed) : values;
  const std::size_t n = xs.size();
  auto f = [&](const V& v) { return d.format(v); };
  auto dom = [&](const std::vector<V>& t) { return d.in_dom_oplus(std::span<const V>(t)); };
  auto sum = [&](const std::vector<V>& t) { return d.oplus(std::span<const V>(t)); };
  std::vector<AxiomReport> out;

  auto run = [&](std::string axiom, auto body) {
    std::size_t instances = 0;
    std::optional<Witness> failure;
    body(instances, failure);
    out.push_back(failure ? AxiomReport::fail(std::move(axiom), instances, std::move(*failure))
                          : AxiomReport::pass(std::move(axiom), instances));
  };

  run("BN1", [&](std::size_t& count, std::optional<Witness>& fail) {
    detail::for_index_tuples<3>(n, sample_budget, seed + 1, [&](const auto& t) {
      const V &a = xs[t[0]], &b = xs[t[1]], &c = xs[t[2]];
      ++count;
      if (!(d.otimes(a, b) == d.otimes(b, a))) {
        fail = Witness{}.value("a", f(a)).value("b", f(b)).annotate("otimes is not commutative");
        return false;
      }
      if (!(d.otimes(d.otimes(a, b), c) == d.otimes(a, d.otimes(b, c)))) {
        fail = Witness{}.value("a", f(a)).value("b", f(b)).value("c", f(c)).annotate("otimes is not associative");
        return false;
      }
      if (dom({a, b}) && dom({b, a}) && !(sum({a, b}) == sum({b, a}))) {
        fail = Witness{}.value("a", f(a)).value("b", f(b)).annotate("oplus is not commutative");
        return false;
      }
      if (dom({a, b, c}) && dom({a, b}) && dom({b, c})) {
        V ab = sum({a, b}), bc = sum({b, c});
        if (dom({ab, c}) && dom({a, bc}) && !(sum({ab, c}) == sum({a, bc}))) {
          fail = Witness{}.value("a", f(a)).value("b", f(b)).value("c", f(c)).annotate("oplus is not associative");
          return false;
        }
      }
      return true;
    });
  });

  run("BN2", [&](std::size_t& count, std::optional<Witness>& fail) {
    const V top = d.top(), bot = d.bottom();
    for (const auto& x : xs) {
      ++count;
      bool ok = d.in_dom_otimes(top, x) && d.in_dom_otimes(bot, x) && dom({bot, x}) && d.otimes(top, x) == x &&
                d.otimes(bot, x) == bot && sum({bot, x}) == x;
      if (!ok) {
        fail = Witness{}.value("d", f(x));
        return;
      }
    }
  });

  run("BN3", [&](std::size_t& count, std::optional<Witness>& fail) {
    auto check = [&](const V& a, const std::vector<V>& bs) -> bool {
      if (!dom(bs)) return true;
      V s = sum(bs);
      {  // left
        bool pre = d.in_dom_otimes(a, s);
        std::vector<V> prods;
        for (const auto& b : bs) {
          pre = pre && d.in_dom_otimes(a, b);
          if (pre) prods.push_back(d.otimes(a, b));
        }
        if (pre && dom(prods)) {
          ++count;
          if (!(d.otimes(a, s) == sum(prods))) {
            Witness w;
            w.value("a", f(a));
            for (std::size_t i = 0; i < bs.size(); ++i) w.value("b" + std::to_string(i + 1), f(bs[i]));
            fail = w.annotate("left distributivity fails");
            return false;
          }
        }
      }
      {  // right, with `a` as the common right factor
        bool pre = d.in_dom_otimes(s, a);
        std::vector<V> prods;
        for (const auto& b : bs) {
          pre = pre && d.in_dom_otimes(b, a);
          if (pre) prods.push_back(d.otimes(b, a));
        }
        if (pre && dom(prods)) {
          ++count;
          if (!(d.otimes(s, a) == sum(prods))) {
            Witness w;
            w.value("b", f(a));
            for (std::size_t i = 0; i < bs.size(); ++i) w.value("a" + std::to_string(i + 1), f(bs[i]));
            fail = w.annotate("right distributivity fails");
            return false;
          }
        }
      }
      return true;
    };
    detail::for_index_tuples<3>(n, sample_budget, seed + 3, [&](const auto& t) {
      return check(xs[t[0]], {xs[t[1]], xs[t[2]]});
    });
    if (!fail)
      detail::for_index_tuples<4>(n, sample_budget, seed + 4, [&](const auto& t) {
        return check(xs[t[0]], {xs[t[1]], xs[t[2]], xs[t[3]]});
      });
  });

  run("BN4", [&](std::size_t& count, std::optional<Witness>& fail) {
    detail::for_index_tuples<3>(n, sample_budget, seed + 5, [&](const auto& t) {
      const V &a = xs[t[0]], &b = xs[t[1]], &c = xs[t[2]];
      if (c == d.bottom() || !d.in_dom_otimes(a, c) || !d.in_dom_otimes(b, c)) return true;
      ++count;
      if (d.leq(d.otimes(a, c), d.otimes(b, c)) && !d.leq(a, b)) {
        fail = Witness{}.value("a", f(a)).value("b", f(b)).value("c", f(c));
        return false;
      }
      return true;
    });
  });

  run("BN5", [&](std::size_t& count, std::optional<Witness>& fail) {
    if constexpr (!SolvableDomain<D>) {
      throw ConfigurationError("domain '" + d.name() + "' has no otimes solver, which BN5 needs");
    } else {
      auto check = [&](const std::vector<V>& ds, const V& c) -> bool {
        if (!dom(ds) || !d.leq(sum(ds), c)) return true;
        ++count;
        std::vector<V> primes;
        for (const auto& di : ds) {
          if (c == d.bottom()) {
            primes.push_back(d.bottom());
            continue;
          }
          auto q = d.solve_otimes(di, c);
          if (!q) {
            fail = Witness{}.value("d_i", f(di)).value("d", f(c)).annotate("no quotient");
            return false;
          }
          primes.push_back(*q);
        }
        bool ok = dom(primes) && d.in_dom_otimes(sum(primes), c) && d.otimes(sum(primes), c) == sum(ds);
        for (std::size_t i = 0; i < ds.size() && ok; ++i)
          ok = d.in_dom_otimes(primes[i], c) && d.otimes(primes[i], c) == ds[i];
        if (!ok) {
          Witness w;
          for (std::size_t i = 0; i < ds.size(); ++i) w.value("d" + std::to_string(i + 1), f(ds[i]));
          fail = w.value("d", f(c)).annotate("quotients do not satisfy the division property");
          return false;
        }
        return true;
      };
      detail::for_index_tuples<2>(n, sample_budget, seed + 6, [&](const auto& t) { return check({xs[t[0]]}, xs[t[1]]); });
      if (!fail)
        detail::for_index_tuples<3>(n, sample_budget, seed + 7,
                                    [&](const auto& t) { return check({xs[t[0]], xs[t[1]]}, xs[t[2]]); });
      if (!fail)
        detail::for_index_tuples<4>(n, sample_budget, seed + 8,
                                    [&](const auto& t) { return check({xs[t[0]], xs[t[1]], xs[t[2]]}, xs[t[3]]); });
    }
  });

  run("BN6", [&](std::size_t& count, std::optional<Witness>& fail) {
    for (const auto& x : xs) {
      ++count;
      if (!dom({x})) {
        fail = Witness{}.value("d", f(x)).annotate("singleton outside Dom(oplus)");
        return;
      }
    }
    detail::for_index_tuples<3>(n, sample_budget, seed + 9, [&](const auto& t) {
      std::vector<V> tuple = {xs[t[0]], xs[t[1]], xs[t[2]]};
      if (!dom(tuple)) return true;
      ++count;
      bool ok = dom({tuple[0]}) && dom({tuple[0], tuple[1]});
      for (const auto& p : detail::permutations_of(tuple)) ok = ok && dom(p);
      if (!ok) {
        fail = Witness{}.value("d1", f(tuple[0])).value("d2", f(tuple[1])).value("d3", f(tuple[2]));
        return false;
      }
      return true;
    });
  });

  run("BN7", [&](std::size_t& count, std::optional<Witness>& fail) {
    detail::for_index_tuples<4>(n, sample_budget, seed + 10, [&](const auto& t) {
      std::vector<V> a = {xs[t[0]], xs[t[1]]}, b = {xs[t[2]], xs[t[3]]};
      if (!dom(a) || !dom(b)) return true;
      std::vector<V> prods;
      for (const auto& x : a)
        for (const auto& y : b) {
          if (!d.in_dom_otimes(x, y)) return true;
          prods.push_back(d.otimes(x, y));
        }
      ++count;
      if (!dom(prods)) {
        fail = Witness{}.value("d1", f(a[0])).value("d2", f(a[1])).value("d1'", f(b[0])).value("d2'", f(b[1]));
        return false;
      }
      return true;
    });
  });

  run("BN8", [&](std::size_t& count, std::optional<Witness>& fail) {
    detail::for_index_tuples<3>(n, sample_budget, seed + 11, [&](const auto& t) {
      std::vector<V> tuple = {xs[t[0]], xs[t[1]], xs[t[2]]};
      if (!dom(tuple)) return true;
      ++count;
      V total = sum(tuple);
      bool ok = d.leq(sum({tuple[0]}), total) && d.leq(sum({tuple[0], tuple[1]}), total);
      if (!ok) {
        fail = Witness{}.value("d1", f(tuple[0])).value("d2", f(tuple[1])).value("d3", f(tuple[2]));
        return false;
      }
      return true;
    });
  });
  return out;
}

/// Searches the domain's declared candidates for (d, d') with (d, d') in
/// Dom(oplus), d (+) d' = top, and every product x of fewer than n factors
/// from {d, d'} giving (d,x), (x,d), (d',x), (x,d') in Dom(otimes).
/// `tried` receives the number of candidates examined.
template <AlgebraicDomain D>
std::optional<std::pair<value_of<D>, value_of<D>>> find_rich_pair(const D& d, std::size_t n, std::size_t* tried = nullptr) {
  using V = value_of<D>;
  if (n < 1) throw PreconditionError("richness needs n >= 1");
  std::size_t instances = 0;
  for (const auto& [a, b] : d.richness_candidates()) {
    ++instances;
    if (!in_dom_oplus2(d, a, b) || !(oplus2(d, a, b) == d.top())) continue;
    std::set<V> layer = {a, b};
    std::set<V> all;
    bool ok = true;
    for (std::size_t k = 1; k < n && ok; ++k) {
      for (const auto& x : layer) {
        all.insert(x);
        ok = ok && d.in_dom_otimes(a, x) && d.in_dom_otimes(x, a) && d.in_dom_otimes(b, x) && d.in_dom_otimes(x, b);
      }
      std::set<V> next;
      for (const auto& x : layer) {
        next.insert(d.otimes(x, a));
        next.insert(d.otimes(x, b));
      }
      bool grew = false;
      for (const auto& x : next) grew = grew || !all.count(x);
      layer = std::move(next);
      if (!grew) break;
    }
    if (ok) {
      if (tried) *tried = instances;
      return std::pair<V, V>{a, b};
    }
  }
  if (tried) *tried = instances;
  return std::nullopt;
}

/// Richness as a report: `holds` with the pair as witness, or `inconclusive`.
template <AlgebraicDomain D>
AxiomReport check_rich(const D& d, std::size_t n) {
  std::size_t instances = 0;
  auto pair = find_rich_pair(d, n, &instances);
  if (!pair) return {"Rich", Verdict::inconclusive, instances, std::nullopt};
  AxiomReport r = AxiomReport::pass("Rich", instances);
  r.witness = Witness{}.value("d", d.format(pair->first)).value("d'", d.format(pair->second));
  return r;
}

}  // namespace plausible
