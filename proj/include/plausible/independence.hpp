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
#include <string>
#include <vector>

#include "plausible/cps.hpp"
#include "plausible/domain.hpp"
#include "plausible/errors.hpp"
#include "plausible/measures.hpp"
#include "plausible/report.hpp"
#include "plausible/worlds.hpp"

namespace plausible {

/// Pl(U|V n V') = Pl(U|V') whenever V n V' is conditionable, and
/// Pl(V|U n V') = Pl(V|V') whenever U n V' is conditionable. Each clause is
/// vacuous when its conditioning event is not conditionable.
template <PlausibilityDomain D>
bool indep_events(const Cps<D>& cps, const Event& u, const Event& v, const Event& vp) {
  auto clause = [&](const Event& a, const Event& b) {
    auto lhs = cps.pl(a, b & vp);
    if (!lhs) return true;
    auto rhs = cps.pl(a, vp);
    return rhs && *lhs == *rhs;
  };
  return clause(u, v) && clause(v, u);
}

/// Outcome of a noninteractivity query; `diagnostic` explains a false
/// answer caused by an operation that has no value on the required pair.
struct NiAnswer {
  bool holds = true;
  std::string diagnostic;
  explicit operator bool() const noexcept { return holds; }
};

/// If V' is conditionable then Pl(U n V|V') = Pl(U|V') (x) Pl(V|V').
template <AlgebraicDomain D>
NiAnswer noninteract_events(const Cps<D>& cps, const Event& u, const Event& v, const Event& vp) {
  if (!cps.conditionable(vp)) return {};
  const auto& d = cps.domain();
  auto a = cps.at(u, vp);
  auto b = cps.at(v, vp);
  try {
    return {d.otimes(a, b) == cps.at(u & v, vp), {}};
  } catch (const DomainError& e) {
    return {false, "otimes(" + d.format(a) + ", " + d.format(b) + ") has no value: " + e.what()};
  }
}

namespace detail {

inline void check_disjoint(const VariableSet& x, const VariableSet& y, const VariableSet& z, std::size_t n) {
  std::vector<int> seen(n, 0);
  for (const auto* s : {&x, &y, &z})
    for (auto v : *s) {
      if (v >= n) throw PreconditionError("variable index out of range");
      if (seen[v]++) throw PreconditionError("variable sets must be pairwise disjoint");
    }
}

}  // namespace detail

/// I(X, Y | Z) for sets of binary variables: indep_events over every
/// assignment. Vacuously true when X or Y is empty; Z empty conditions on W.
template <PlausibilityDomain D>
bool indep_rv(const Cps<D>& cps, const VariableSet& x, const VariableSet& y, const VariableSet& z) {
  const auto& s = cps.space();
  detail::check_disjoint(x, y, z, s.variable_count());
  if (x.empty() || y.empty()) return true;
  std::vector<Event> xs, ys;
  for (std::size_t a = 0; a < (std::size_t{1} << x.size()); ++a) xs.push_back(s.assignment_code(x, a));
  for (std::size_t b = 0; b < (std::size_t{1} << y.size()); ++b) ys.push_back(s.assignment_code(y, b));
  for (std::size_t c = 0; c < (std::size_t{1} << z.size()); ++c) {
    Event ze = s.assignment_code(z, c);
    for (const auto& xe : xs)
      for (const auto& ye : ys)
        if (!indep_events(cps, xe, ye, ze)) return false;
  }
  return true;
}

/// Probabilistic conditional independence of X and Y given Z under every
/// member of the family separately.
inline bool type1_indep(const ProbabilitySet& ps, const VariableSet& x, const VariableSet& y, const VariableSet& z) {
  const auto& s = ps.space();
  detail::check_disjoint(x, y, z, s.variable_count());
  if (x.empty() || y.empty()) return true;
  for (const auto& mu : ps.members()) {
    for (std::size_t c = 0; c < (std::size_t{1} << z.size()); ++c) {
      Event ze = s.assignment_code(z, c);
      Rational mz = mu(ze);
      if (mz == 0) continue;
      for (std::size_t a = 0; a < (std::size_t{1} << x.size()); ++a) {
        Event xe = s.assignment_code(x, a) & ze;
        Rational mx = mu(xe);
        for (std::size_t b = 0; b < (std::size_t{1} << y.size()); ++b) {
          Event ye = s.assignment_code(y, b) & ze;
          if (mu(xe & ye) * mz != mx * mu(ye)) return false;
        }
      }
    }
  }
  return true;
}

/// The three textbook forms of probabilistic independence agree:
/// (a) mu(V) > 0 implies mu(U|V) = mu(U), (b) mu(U n V) = mu(U) mu(V),
/// (c) mu(U) > 0 implies mu(V|U) = mu(V).
inline AxiomReport check_prob_indep_equivalence(const ProbabilityMeasure& mu, const Event& u, const Event& v) {
  Rational pu = mu(u), pv = mu(v), puv = mu(u & v);
  bool a = pv == 0 || puv / pv == pu;
  bool b = puv == pu * pv;
  bool c = pu == 0 || puv / pu == pv;
  if (a == b && b == c) return AxiomReport::pass("ProbIndep.equivalence", 1);
  return AxiomReport::fail("ProbIndep.equivalence", 1,
                           Witness{}
                               .event("U", u)
                               .event("V", v)
                               .value("(a)", a ? "true" : "false")
                               .value("(b)", b ? "true" : "false")
                               .value("(c)", c ? "true" : "false"));
}

/// The optional strengthening: U independent of V given V' together with
/// the same for the complement of U.
template <PlausibilityDomain D>
bool indep_with_complement(const Cps<D>& cps, const Event& u, const Event& v, const Event& vp) {
  return indep_events(cps, u, v, vp) && indep_events(cps, u.complement(), v, vp);
}

}  // namespace plausible
