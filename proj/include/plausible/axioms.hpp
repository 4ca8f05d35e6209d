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
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "plausible/cps.hpp"
#include "plausible/domain.hpp"
#include "plausible/errors.hpp"
#include "plausible/measures.hpp"
#include "plausible/random.hpp"
#include "plausible/report.hpp"

namespace plausible {

/// How audits choose instances: every tuple of events when |W| is at most
/// `exhaustive_max_worlds`, otherwise `samples` seeded random tuples.
struct AuditOptions {
  std::size_t exhaustive_max_worlds = 5;
  std::size_t samples = 4000;
  std::uint64_t seed = 0x2545F4914F6CDD1DULL;
};

namespace detail {

using Mask = std::uint64_t;

/// Result of checking one instance of an axiom.
struct Step {
  enum Kind { skip, ok, bad } kind = ok;
  Witness witness;

  static Step skipped() { return {skip, {}}; }
  static Step passed() { return {ok, {}}; }
  static Step failed(Witness w) { return {bad, std::move(w)}; }
};

inline Mask random_mask(Rng& rng, Mask full) { return rng() & full; }

/// Runs `body` over every K-tuple of events accepted by `keep` (exhaustive
/// mode) or over `samples` tuples produced by `draw`. Stops at the first
/// failure.
template <std::size_t K, typename Keep, typename Draw, typename Body>
AxiomReport drive(std::string axiom, std::size_t worlds, const AuditOptions& opt, std::uint64_t salt, Keep keep,
                  Draw draw, Body body) {
  std::size_t instances = 0;
  std::optional<Witness> failure;
  auto handle = [&](const std::array<Mask, K>& t) {
    Step s = body(t);
    if (s.kind == Step::skip) return true;
    ++instances;
    if (s.kind == Step::bad) {
      failure = std::move(s.witness);
      return false;
    }
    return true;
  };
  const Mask full = (Mask{1} << worlds) - 1;
  if (worlds <= opt.exhaustive_max_worlds) {
    std::array<Mask, K> t{};
    while (true) {
      if (keep(t) && !handle(t)) break;
      std::size_t i = 0;
      while (i < K && t[i] == full) t[i++] = 0;
      if (i == K) break;
      ++t[i];
    }
  } else {
    Rng rng(opt.seed ^ (salt * 0x9E3779B97F4A7C15ULL));
    for (std::size_t k = 0; k < opt.samples; ++k)
      if (!handle(draw(rng, full))) break;
  }
  if (failure) return AxiomReport::fail(std::move(axiom), instances, std::move(*failure));
  return AxiomReport::pass(std::move(axiom), instances);
}

inline auto keep_all = [](const auto&) { return true; };

template <PlausibilityDomain D>
std::string fmt(const D& d, const value_of<D>* v) {
  return v ? d.format(*v) : std::string("undefined");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Unconditional measures

/// Pl1 (empty set is bottom), Pl2 (W is top), Pl3 (monotone under subset).
template <UnconditionalMeasure M>
std::vector<AxiomReport> check_unconditional_axioms(const M& m, const AuditOptions& opt = {}) {
  using detail::Mask;
  const auto& d = m.domain();
  using V = value_of<std::remove_cvref_t<decltype(d)>>;
  const std::size_t n = m.space().size();
  if (n > 20) throw PreconditionError("unconditional audits support at most 20 worlds");
  const Mask full = (Mask{1} << n) - 1;

  std::vector<std::optional<V>> cache(std::size_t{1} << n);
  auto value = [&](Mask e) -> const V& {
    auto& c = cache[e];
    if (!c) {
      c = m(Event::from_mask(n, e));
      if (!d.in_carrier(*c))
        throw MalformedMeasure("value " + d.format(*c) + " of " + m.space().format(Event::from_mask(n, e)) +
                               " is outside the " + d.name() + " carrier");
    }
    return *c;
  };
  auto ev = [&](Mask e) { return Event::from_mask(n, e); };

  // Every value is validated against the carrier when the table is small.
  if (n <= 12)
    for (Mask e = 0; e <= full; ++e) value(e);

  std::vector<AxiomReport> out;
  if (value(0) == d.bottom()) {
    out.push_back(AxiomReport::pass("Pl1", 1));
  } else {
    out.push_back(AxiomReport::fail("Pl1", 1, Witness{}.event("U", ev(0)).value("Pl(U)", d.format(value(0)))));
  }
  if (value(full) == d.top()) {
    out.push_back(AxiomReport::pass("Pl2", 1));
  } else {
    out.push_back(AxiomReport::fail("Pl2", 1, Witness{}.event("U", ev(full)).value("Pl(U)", d.format(value(full)))));
  }
  AuditOptions pl3 = opt;
  pl3.exhaustive_max_worlds = std::max<std::size_t>(opt.exhaustive_max_worlds, 10);
  out.push_back(detail::drive<2>(
      "Pl3", n, pl3, 3, [](const auto& t) { return (t[0] & ~t[1]) == 0; },
      [](Rng& rng, Mask f) {
        Mask b = detail::random_mask(rng, f);
        return std::array<Mask, 2>{b & detail::random_mask(rng, f), b};
      },
      [&](const auto& t) {
        if (d.leq(value(t[0]), value(t[1]))) return detail::Step::passed();
        return detail::Step::failed(Witness{}
                                        .event("U", ev(t[0]))
                                        .event("U'", ev(t[1]))
                                        .value("Pl(U)", d.format(value(t[0])))
                                        .value("Pl(U')", d.format(value(t[1])))
                                        .annotate("U is a subset of U' but Pl(U) is not below Pl(U')"));
      }));
  return out;
}

// ---------------------------------------------------------------------------
// Conditional spaces

/// CPl1-CPl4, Acc1-Acc4 and standardness. Throws MalformedCps when
/// definedness of Pl(U|V) depends on U.
template <PlausibilityDomain D>
std::vector<AxiomReport> check_cps_axioms(const Cps<D>& cps, const AuditOptions& opt = {}) {
  using detail::Mask;
  using detail::Step;
  detail::Probe<D> p(cps);
  const auto& d = cps.domain();
  const std::size_t n = p.worlds();
  auto ev = [&](Mask m) { return p.event(m); };
  auto any = [](Rng& rng, Mask f) {
    return std::array<Mask, 1>{detail::random_mask(rng, f)};
  };
  auto any2 = [](Rng& rng, Mask f) {
    return std::array<Mask, 2>{detail::random_mask(rng, f), detail::random_mask(rng, f)};
  };

  std::vector<AxiomReport> out;
  out.push_back(detail::drive<1>("CPl1", n, opt, 11, detail::keep_all, any, [&](const auto& t) {
    const auto* v = p.value(0, t[0]);
    if (!v) return Step::skipped();
    if (*v == d.bottom()) return Step::passed();
    return Step::failed(Witness{}.event("U", ev(0)).event("V", ev(t[0])).value("Pl(U|V)", d.format(*v)));
  }));
  out.push_back(detail::drive<1>("CPl2", n, opt, 12, detail::keep_all, any, [&](const auto& t) {
    const auto* v = p.value(p.full(), t[0]);
    if (!v) return Step::skipped();
    if (*v == d.top()) return Step::passed();
    return Step::failed(Witness{}.event("U", ev(p.full())).event("V", ev(t[0])).value("Pl(U|V)", d.format(*v)));
  }));
  out.push_back(detail::drive<3>(
      "CPl3", n, opt, 13, [](const auto& t) { return (t[0] & ~t[1]) == 0; },
      [](Rng& rng, Mask f) {
        Mask b = detail::random_mask(rng, f);
        return std::array<Mask, 3>{b & detail::random_mask(rng, f), b, detail::random_mask(rng, f)};
      },
      [&](const auto& t) {
        const auto* a = p.value(t[0], t[2]);
        if (!a) return Step::skipped();
        const auto* b = p.value(t[1], t[2]);
        if (d.leq(*a, *b)) return Step::passed();
        return Step::failed(Witness{}
                                .event("U", ev(t[0]))
                                .event("U'", ev(t[1]))
                                .event("V", ev(t[2]))
                                .value("Pl(U|V)", d.format(*a))
                                .value("Pl(U'|V)", d.format(*b)));
      }));
  out.push_back(detail::drive<2>("CPl4", n, opt, 14, detail::keep_all, any2, [&](const auto& t) {
    const auto* a = p.value(t[0], t[1]);
    if (!a) return Step::skipped();
    const auto* b = p.value(t[0] & t[1], t[1]);
    if (*a == *b) return Step::passed();
    return Step::failed(Witness{}
                            .event("U", ev(t[0]))
                            .event("V", ev(t[1]))
                            .value("Pl(U|V)", d.format(*a))
                            .value("Pl(U n V|V)", d.format(*b)));
  }));

  out.push_back(AxiomReport::pass("Acc1", 1));  // F = 2^W is an algebra

  {
    bool found = p.conditionable(p.full());
    std::size_t tried = 1;
    if (!found && n <= 20) {
      for (Mask v = 0; v <= p.full() && !found; ++v, ++tried) found = p.conditionable(v);
    }
    if (found) {
      out.push_back(AxiomReport::pass("Acc2", tried));
    } else {
      Witness w;
      w.note = "no conditionable event";
      out.push_back(AxiomReport::fail("Acc2", tried, std::move(w)));
    }
  }
  out.push_back(detail::drive<2>(
      "Acc3", n, opt, 15, [](const auto& t) { return (t[0] & ~t[1]) == 0; },
      [](Rng& rng, Mask f) {
        Mask b = detail::random_mask(rng, f);
        return std::array<Mask, 2>{b & detail::random_mask(rng, f), b};
      },
      [&](const auto& t) {
        if (!p.conditionable(t[0])) return Step::skipped();
        if (p.conditionable(t[1])) return Step::passed();
        return Step::failed(
            Witness{}.event("V", ev(t[0])).event("V'", ev(t[1])).annotate("V is conditionable, its superset V' is not"));
      }));
  out.push_back(detail::drive<2>("Acc4", n, opt, 16, detail::keep_all, any2, [&](const auto& t) {
    const auto* a = p.value(t[0], t[1]);
    if (!a || *a == d.bottom()) return Step::skipped();
    if (p.conditionable(t[0] & t[1])) return Step::passed();
    return Step::failed(Witness{}
                            .event("U", ev(t[0]))
                            .event("V", ev(t[1]))
                            .value("Pl(U|V)", d.format(*a))
                            .annotate("Pl(U|V) is not bottom but U n V is not conditionable"));
  }));

  if (!p.conditionable(p.full())) {
    Witness w;
    w.event("U", ev(p.full())).annotate("W is not conditionable, so Pl(U) is undefined");
    out.push_back(AxiomReport::fail("Standard", 1, std::move(w)));
  } else {
    out.push_back(detail::drive<1>("Standard", n, opt, 17, detail::keep_all, any, [&](const auto& t) {
      const auto* u = p.value(t[0], p.full());
      bool cond = p.conditionable(t[0]);
      if (cond == !(*u == d.bottom())) return Step::passed();
      return Step::failed(Witness{}
                              .event("U", ev(t[0]))
                              .value("Pl(U)", d.format(*u))
                              .annotate(cond ? "U is conditionable although Pl(U) is bottom"
                                         : "U is not conditionable although Pl(U) is not bottom"));
    }));
  }
  return out;
}

/// Coherence: when V n V' is conditionable, Pl(U|V n V') <= Pl(U'|V n V')
/// iff Pl(U n V|V') <= Pl(U' n V|V').
template <PlausibilityDomain D>
AxiomReport check_cpl5(const Cps<D>& cps, const AuditOptions& opt = {}) {
  using detail::Mask;
  using detail::Step;
  detail::Probe<D> p(cps);
  const auto& d = cps.domain();
  auto ev = [&](Mask m) { return p.event(m); };
  return detail::drive<4>(
      "CPl5", p.worlds(), opt, 21, detail::keep_all,
      [](Rng& rng, Mask f) {
        return std::array<Mask, 4>{detail::random_mask(rng, f), detail::random_mask(rng, f),
                                   detail::random_mask(rng, f), detail::random_mask(rng, f)};
      },
      [&](const auto& t) {
        const Mask u = t[0], u2 = t[1], v = t[2], v2 = t[3];
        const auto* a = p.value(u, v & v2);
        if (!a) return Step::skipped();
        const auto* b = p.value(u2, v & v2);
        const auto* c = p.value(u & v, v2);
        const auto* e = p.value(u2 & v, v2);
        Witness w;
        w.event("U", ev(u)).event("U'", ev(u2)).event("V", ev(v)).event("V'", ev(v2));
        if (!c) return Step::failed(std::move(w.annotate("V n V' is conditionable but V' is not")));
        bool lhs = d.leq(*a, *b);
        bool rhs = d.leq(*c, *e);
        if (lhs == rhs) return Step::passed();
        w.value("Pl(U|V n V')", d.format(*a))
            .value("Pl(U'|V n V')", d.format(*b))
            .value("Pl(U n V|V')", d.format(*c))
            .value("Pl(U' n V|V')", d.format(*e));
        return Step::failed(std::move(w));
      });
}

/// CPl5 at one given instance (U, U', V, V'); vacuous when V n V' is not
/// conditionable.
template <PlausibilityDomain D>
AxiomReport check_cpl5_at(const Cps<D>& cps, const Event& u, const Event& u2, const Event& v, const Event& v2) {
  const auto& d = cps.domain();
  if (!cps.conditionable(v & v2)) return AxiomReport::pass("CPl5", 0);
  Witness w;
  w.event("U", u).event("U'", u2).event("V", v).event("V'", v2);
  if (!cps.conditionable(v2)) return AxiomReport::fail("CPl5", 1, std::move(w.annotate("V n V' is conditionable but V' is not")));
  auto a = cps.at(u, v & v2), b = cps.at(u2, v & v2), c = cps.at(u & v, v2), e = cps.at(u2 & v, v2);
  w.value("Pl(U|V n V')", d.format(a))
      .value("Pl(U'|V n V')", d.format(b))
      .value("Pl(U n V|V')", d.format(c))
      .value("Pl(U' n V|V')", d.format(e));
  if (d.leq(a, b) == d.leq(c, e)) return AxiomReport::pass("CPl5", 1);
  return AxiomReport::fail("CPl5", 1, std::move(w));
}

namespace detail {

/// Realized argument sets: Dom_Pl(oplus) tuples (length 1 to 3) and
/// Dom_Pl(otimes) pairs (right factor -> left factors), plus Range(Pl).
template <PlausibilityDomain D>
struct Realized {
  using V = value_of<D>;
  std::set<std::vector<V>> oplus_tuples;
  std::map<V, std::set<V>> otimes_left;  // b -> {a : (a, b) realized}
  std::set<V> range;

  bool has_otimes(const V& a, const V& b) const {
    auto it = otimes_left.find(b);
    return it != otimes_left.end() && it->second.count(a) > 0;
  }
};

template <PlausibilityDomain D>
Realized<D> collect_realized(Probe<D>& p, const AuditOptions& opt) {
  Realized<D> r;
  const std::size_t n = p.worlds();
  const Mask full = p.full();
  Rng rng(opt.seed ^ 0xA1A1A1A1ULL);
  auto add_tuples = [&](Mask v, std::size_t code_space, auto next_code) {
    for (std::size_t k = 0; k < code_space; ++k) {
      std::size_t code = next_code(k);
      std::array<Mask, 3> parts{};
      std::size_t c = code;
      for (std::size_t w = 0; w < n; ++w) {
        std::size_t slot = c % 4;
        c /= 4;
        if (slot > 0) parts[slot - 1] |= Mask{1} << w;
      }
      std::vector<value_of<D>> tuple;
      for (std::size_t i = 0; i < 3; ++i) {
        tuple.push_back(*p.value(parts[i], v));
        r.oplus_tuples.insert(tuple);
      }
    }
  };
  auto add_products = [&](Mask u, Mask v, Mask v2) {
    const auto* a = p.value(u, v & v2);
    if (!a) return;
    const auto* b = p.value(v, v2);
    if (!b) return;
    r.otimes_left[*b].insert(*a);
    r.range.insert(*a);
    r.range.insert(*b);
  };
  if (n <= opt.exhaustive_max_worlds) {
    std::size_t codes = std::size_t{1} << (2 * n);
    for (Mask v = 0; v <= full; ++v)
      if (p.conditionable(v)) add_tuples(v, codes, [](std::size_t k) { return k; });
    for (Mask u = 0; u <= full; ++u)
      for (Mask v = 0; v <= full; ++v)
        for (Mask v2 = 0; v2 <= full; ++v2) add_products(u, v, v2);
  } else {
    std::size_t found = 0;
    for (std::size_t k = 0; k < 4 * opt.samples && found < opt.samples; ++k) {
      Mask v = random_mask(rng, full);
      if (!p.conditionable(v)) continue;
      ++found;
      add_tuples(v, 1, [&](std::size_t) {
        std::size_t code = 0;
        for (std::size_t w = 0; w < n; ++w) code |= static_cast<std::size_t>(below(rng, 4)) << (2 * w);
        return code;
      });
    }
    for (std::size_t k = 0; k < opt.samples; ++k)
      add_products(random_mask(rng, full), random_mask(rng, full), random_mask(rng, full));
  }
  return r;
}

}  // namespace detail

/// Alg1-Alg4 on the realized argument sets, with Acc4 as prerequisite and
/// the bottom/top identities over Range(Pl).
template <AlgebraicDomain D>
std::vector<AxiomReport> check_algebraic(const Cps<D>& cps, const AuditOptions& opt = {}) {
  using detail::Mask;
  using detail::Step;
  using V = value_of<D>;
  detail::Probe<D> p(cps);
  const auto& d = cps.domain();
  const std::size_t n = p.worlds();
  auto ev = [&](Mask m) { return p.event(m); };
  std::vector<AxiomReport> out;

  out.push_back(detail::drive<2>(
      "Acc4", n, opt, 31, detail::keep_all,
      [](Rng& rng, Mask f) {
        return std::array<Mask, 2>{detail::random_mask(rng, f), detail::random_mask(rng, f)};
      },
      [&](const auto& t) {
        const auto* a = p.value(t[0], t[1]);
        if (!a || *a == d.bottom()) return Step::skipped();
        if (p.conditionable(t[0] & t[1])) return Step::passed();
        return Step::failed(Witness{}.event("U", ev(t[0])).event("V", ev(t[1])).value("Pl(U|V)", d.format(*a)));
      }));

  out.push_back(detail::drive<3>(
      "Alg1", n, opt, 32, [](const auto& t) { return (t[0] & t[1]) == 0; },
      [](Rng& rng, Mask f) {
        Mask u = detail::random_mask(rng, f);
        return std::array<Mask, 3>{u, detail::random_mask(rng, f) & ~u, detail::random_mask(rng, f)};
      },
      [&](const auto& t) {
        const auto* a = p.value(t[0], t[2]);
        if (!a) return Step::skipped();
        const auto* b = p.value(t[1], t[2]);
        const auto* c = p.value(t[0] | t[1], t[2]);
        Witness w;
        w.event("U", ev(t[0]))
            .event("U'", ev(t[1]))
            .event("V", ev(t[2]))
            .value("Pl(U|V)", d.format(*a))
            .value("Pl(U'|V)", d.format(*b))
            .value("Pl(U u U'|V)", d.format(*c));
        if (!in_dom_oplus2(d, *a, *b)) return Step::failed(std::move(w.annotate("(Pl(U|V), Pl(U'|V)) is outside Dom(oplus)")));
        if (oplus2(d, *a, *b) == *c) return Step::passed();
        return Step::failed(std::move(w));
      }));

  out.push_back(detail::drive<3>(
      "Alg2", n, opt, 33, detail::keep_all,
      [](Rng& rng, Mask f) {
        return std::array<Mask, 3>{detail::random_mask(rng, f), detail::random_mask(rng, f),
                                   detail::random_mask(rng, f)};
      },
      [&](const auto& t) {
        const Mask u = t[0], v = t[1], v2 = t[2];
        const auto* a = p.value(u, v & v2);
        if (!a) return Step::skipped();
        const auto* b = p.value(v, v2);
        Witness w;
        w.event("U", ev(u)).event("V", ev(v)).event("V'", ev(v2)).value("Pl(U|V n V')", d.format(*a));
        if (!b) return Step::failed(std::move(w.annotate("V n V' is conditionable but V' is not")));
        const auto* c = p.value(u & v, v2);
        w.value("Pl(V|V')", d.format(*b)).value("Pl(U n V|V')", d.format(*c));
        if (!d.in_dom_otimes(*a, *b)) return Step::failed(std::move(w.annotate("the pair is outside Dom(otimes)")));
        if (d.otimes(*a, *b) == *c) return Step::passed();
        return Step::failed(std::move(w));
      }));

  auto realized = detail::collect_realized(p, opt);

  {  // Alg3: a (x) (b1 (+) ... (+) bk) = (a (x) b1) (+) ... (+) (a (x) bk)
    std::size_t instances = 0;
    std::optional<Witness> failure;
    for (const auto& b : realized.oplus_tuples) {
      if (failure) break;
      if (!d.in_dom_oplus(std::span<const V>(b))) continue;
      V sum = d.oplus(std::span<const V>(b));
      auto it = realized.otimes_left.find(sum);
      if (it == realized.otimes_left.end()) continue;
      for (const auto& a : it->second) {
        bool all = true;
        for (const auto& bi : b) all = all && realized.has_otimes(a, bi);
        if (!all) continue;
        std::vector<V> prods;
        for (const auto& bi : b) prods.push_back(d.otimes(a, bi));
        if (!realized.oplus_tuples.count(prods)) continue;
        ++instances;
        V lhs = d.otimes(a, sum);
        bool ok = d.in_dom_oplus(std::span<const V>(prods)) && d.oplus(std::span<const V>(prods)) == lhs;
        if (!ok) {
          Witness w;
          w.value("a", d.format(a));
          for (std::size_t i = 0; i < b.size(); ++i) w.value("b" + std::to_string(i + 1), d.format(b[i]));
          w.value("a (x) sum", d.format(lhs));
          failure = std::move(w);
          break;
        }
      }
    }
    out.push_back(failure ? AxiomReport::fail("Alg3", instances, std::move(*failure))
                          : AxiomReport::pass("Alg3", instances));
  }

  {  // Alg4: cancellation of a common right factor c != bottom
    std::size_t instances = 0;
    std::optional<Witness> failure;
    for (const auto& [c, lefts] : realized.otimes_left) {
      if (failure) break;
      if (c == d.bottom()) continue;
      for (const auto& a : lefts) {
        if (failure) break;
        V ac = d.otimes(a, c);
        for (const auto& b : lefts) {
          ++instances;
          if (d.leq(ac, d.otimes(b, c)) && !d.leq(a, b)) {
            failure = Witness{}.value("a", d.format(a)).value("b", d.format(b)).value("c", d.format(c));
            break;
          }
        }
      }
    }
    out.push_back(failure ? AxiomReport::fail("Alg4", instances, std::move(*failure))
                          : AxiomReport::pass("Alg4", instances));
  }

  for (const auto& t : realized.oplus_tuples)
    for (const auto& x : t) realized.range.insert(x);

  {
    std::size_t instances = 0;
    std::optional<Witness> failure;
    for (const auto& x : realized.range) {
      ++instances;
      const V bot = d.bottom();
      bool ok = in_dom_oplus2(d, x, bot) && in_dom_oplus2(d, bot, x) && oplus2(d, x, bot) == x && oplus2(d, bot, x) == x;
      if (!ok) {
        failure = Witness{}.value("d", d.format(x)).annotate("d (+) bottom differs from d");
        break;
      }
    }
    out.push_back(failure ? AxiomReport::fail("Lemma.oplus-bottom", instances, std::move(*failure))
                          : AxiomReport::pass("Lemma.oplus-bottom", instances));
  }
  {
    std::size_t instances = 0;
    std::optional<Witness> failure;
    for (const auto& x : realized.range) {
      ++instances;
      bool ok = d.otimes(x, d.top()) == x;
      if (!(x == d.bottom())) ok = ok && d.otimes(d.top(), x) == x && d.otimes(d.bottom(), x) == d.bottom();
      if (!ok) {
        failure = Witness{}.value("d", d.format(x)).annotate("top or bottom does not act as expected under otimes");
        break;
      }
    }
    out.push_back(failure ? AxiomReport::fail("Lemma.otimes-top", instances, std::move(*failure))
                          : AxiomReport::pass("Lemma.otimes-top", instances));
  }
  return out;
}

/// For value sets without oplus/otimes: looks for instances proving that
/// no operation can exist. Alg1 is refuted by disjoint pairs (U1,U2) given
/// V and (U1',U2') given V' with matching component values but different
/// unions; Alg2 likewise for the product identity. When nothing is found
/// the verdict is inconclusive.
template <PlausibilityDomain D>
std::vector<AxiomReport> check_algebraic_obstructions(const Cps<D>& cps, const AuditOptions& opt = {}) {
  using detail::Mask;
  using V = value_of<D>;
  detail::Probe<D> p(cps);
  const auto& d = cps.domain();
  const std::size_t n = p.worlds();
  const Mask full = p.full();
  auto ev = [&](Mask m) { return p.event(m); };
  std::vector<AxiomReport> out;

  struct Seen {
    V value;
    std::array<Mask, 3> events;
  };
  Rng rng(opt.seed ^ 0xB2B2ULL);
  const bool exhaustive = n <= opt.exhaustive_max_worlds;

  {
    std::map<std::pair<V, V>, Seen> seen;
    std::size_t instances = 0;
    std::optional<Witness> failure;
    auto visit = [&](Mask u1, Mask u2, Mask v) {
      const auto* a = p.value(u1, v);
      if (!a) return true;
      const auto* b = p.value(u2, v);
      const auto* c = p.value(u1 | u2, v);
      ++instances;
      auto [it, fresh] = seen.try_emplace({*a, *b}, Seen{*c, {u1, u2, v}});
      if (fresh || it->second.value == *c) return true;
      const auto& e = it->second.events;
      failure = Witness{}
                    .event("U1", ev(e[0]))
                    .event("U2", ev(e[1]))
                    .event("V1", ev(e[2]))
                    .event("U1'", ev(u1))
                    .event("U2'", ev(u2))
                    .event("V2", ev(v))
                    .value("Pl(U1|V1)", d.format(*a))
                    .value("Pl(U2|V1)", d.format(*b))
                    .value("Pl(U1 u U2|V1)", d.format(it->second.value))
                    .value("Pl(U1' u U2'|V2)", d.format(*c))
                    .annotate("equal component plausibilities, different unions");
      return false;
    };
    if (exhaustive) {
      bool go = true;
      for (Mask v = 0; v <= full && go; ++v)
        for (Mask u1 = 0; u1 <= full && go; ++u1)
          for (Mask u2 = 0; u2 <= full && go; ++u2)
            if ((u1 & u2) == 0) go = visit(u1, u2, v);
    } else {
      for (std::size_t k = 0; k < opt.samples; ++k) {
        Mask u1 = detail::random_mask(rng, full);
        if (!visit(u1, detail::random_mask(rng, full) & ~u1, detail::random_mask(rng, full))) break;
      }
    }
    out.push_back(failure ? AxiomReport::fail("Alg1", instances, std::move(*failure))
                          : AxiomReport{"Alg1", Verdict::inconclusive, instances, std::nullopt});
  }
  {
    std::map<std::pair<V, V>, Seen> seen;
    std::size_t instances = 0;
    std::optional<Witness> failure;
    auto visit = [&](Mask u, Mask v, Mask v2) {
      const auto* a = p.value(u, v & v2);
      if (!a) return true;
      const auto* b = p.value(v, v2);
      if (!b) return true;
      const auto* c = p.value(u & v, v2);
      ++instances;
      auto [it, fresh] = seen.try_emplace({*a, *b}, Seen{*c, {u, v, v2}});
      if (fresh || it->second.value == *c) return true;
      const auto& e = it->second.events;
      failure = Witness{}
                    .event("U1", ev(e[0]))
                    .event("V1", ev(e[1]))
                    .event("V1'", ev(e[2]))
                    .event("U2", ev(u))
                    .event("V2", ev(v))
                    .event("V2'", ev(v2))
                    .value("Pl(U|V n V')", d.format(*a))
                    .value("Pl(V|V')", d.format(*b))
                    .value("Pl(U1 n V1|V1')", d.format(it->second.value))
                    .value("Pl(U2 n V2|V2')", d.format(*c))
                    .annotate("equal factors, different products");
      return false;
    };
    if (exhaustive) {
      bool go = true;
      for (Mask u = 0; u <= full && go; ++u)
        for (Mask v = 0; v <= full && go; ++v)
          for (Mask v2 = 0; v2 <= full && go; ++v2) go = visit(u, v, v2);
    } else {
      for (std::size_t k = 0; k < opt.samples; ++k)
        if (!visit(detail::random_mask(rng, full), detail::random_mask(rng, full), detail::random_mask(rng, full)))
          break;
    }
    out.push_back(failure ? AxiomReport::fail("Alg2", instances, std::move(*failure))
                          : AxiomReport{"Alg2", Verdict::inconclusive, instances, std::nullopt});
  }
  return out;
}

/// d <= d' and e <= e' imply d (x) e <= d' (x) e' whenever both pairs lie
/// in Dom(otimes). All quadruples when the sample has at most 20 values,
/// otherwise `opt.samples` random ones.
template <AlgebraicDomain D>
AxiomReport check_monotonic_otimes(const D& d, const std::vector<value_of<D>>& sample, const AuditOptions& opt = {}) {
  const std::size_t s = sample.size();
  std::size_t instances = 0;
  auto test = [&](const auto& a, const auto& a2, const auto& b, const auto& b2) -> std::optional<Witness> {
    if (!d.leq(a, a2) || !d.leq(b, b2)) return std::nullopt;
    if (!d.in_dom_otimes(a, b) || !d.in_dom_otimes(a2, b2)) return std::nullopt;
    ++instances;
    if (d.leq(d.otimes(a, b), d.otimes(a2, b2))) return std::nullopt;
    return Witness{}.value("d", d.format(a)).value("d'", d.format(a2)).value("e", d.format(b)).value("e'", d.format(b2));
  };
  if (s == 0) return AxiomReport::pass("Monotonic", 0);
  if (s <= 20) {
    for (const auto& a : sample)
      for (const auto& a2 : sample)
        for (const auto& b : sample)
          for (const auto& b2 : sample)
            if (auto w = test(a, a2, b, b2)) return AxiomReport::fail("Monotonic", instances, std::move(*w));
  } else {
    Rng rng(opt.seed ^ 0x40404ULL);
    for (std::size_t k = 0; k < opt.samples * 4; ++k) {
      if (auto w = test(sample[below(rng, s)], sample[below(rng, s)], sample[below(rng, s)], sample[below(rng, s)]))
        return AxiomReport::fail("Monotonic", instances, std::move(*w));
    }
  }
  return AxiomReport::pass("Monotonic", instances);
}

/// Range(Pl) of a cps: every value taken by Pl(U|V) (sampled above the
/// exhaustive limit).
template <PlausibilityDomain D>
std::vector<value_of<D>> range_of(const Cps<D>& cps, const AuditOptions& opt = {}) {
  using detail::Mask;
  detail::Probe<D> p(cps);
  std::set<value_of<D>> out;
  const Mask full = p.full();
  if (p.worlds() <= opt.exhaustive_max_worlds) {
    for (Mask v = 0; v <= full; ++v)
      for (Mask u = 0; u <= full; ++u)
        if (const auto* x = p.value(u, v)) out.insert(*x);
  } else {
    Rng rng(opt.seed ^ 0x7777ULL);
    for (std::size_t k = 0; k < opt.samples; ++k)
      if (const auto* x = p.value(detail::random_mask(rng, full), detail::random_mask(rng, full))) out.insert(*x);
  }
  return {out.begin(), out.end()};
}

/// Pl(X|Y) = (+)_{i : A_i n Y conditionable} Pl(X|A_i n Y) (x) Pl(A_i|Y).
template <AlgebraicDomain D>
AxiomReport check_lemma1_expansion(const Cps<D>& cps, const Event& x, const Event& y,
                                   const std::vector<Event>& partition) {
  using V = value_of<D>;
  const auto& d = cps.domain();
  Event cover = cps.none();
  for (const auto& a : partition) {
    if (cover.intersects(a)) throw PreconditionError("partition blocks overlap");
    cover |= a;
  }
  if (!cover.is_full()) throw PreconditionError("partition does not cover W");
  if (!cps.conditionable(y)) throw PreconditionError("Y is not conditionable");

  std::vector<V> terms;
  for (const auto& a : partition) {
    Event ay = a & y;
    auto first = cps.pl(x, ay);
    if (!first) continue;
    terms.push_back(d.otimes(*first, cps.at(a, y)));
  }
  V lhs = cps.at(x, y);
  Witness w;
  w.event("X", x).event("Y", y).value("Pl(X|Y)", d.format(lhs));
  if (!d.in_dom_oplus(std::span<const V>(terms)))
    return AxiomReport::fail("Lemma.expansion", 1, std::move(w.annotate("the terms are outside Dom(oplus)")));
  V rhs = d.oplus(std::span<const V>(terms));
  if (rhs == lhs) return AxiomReport::pass("Lemma.expansion", 1);
  w.value("expansion", d.format(rhs));
  return AxiomReport::fail("Lemma.expansion", 1, std::move(w));
}

}  // namespace plausible
