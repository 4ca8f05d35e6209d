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
#include <string>
#include <tuple>
#include <vector>

#include "plausible/axioms.hpp"
#include "plausible/cps.hpp"
#include "plausible/independence.hpp"
#include "plausible/random.hpp"
#include "plausible/report.hpp"

namespace plausible {

enum class SemigraphoidMode { exhaustive, sampled };

/// Symmetry, decomposition, weak union and contraction (CIRV1-CIRV4) over
/// disjoint variable sets X, Y, Y', Z. Instances count only role
/// assignments whose antecedent holds non-vacuously (X, Y and, for rules
/// 2-4, Y' nonempty). Exhaustive mode covers all 5^n role assignments and
/// needs n <= 4; sampled mode draws `opt.samples` random ones.
template <PlausibilityDomain D>
std::vector<AxiomReport> check_semigraphoid(const Cps<D>& cps, SemigraphoidMode mode, const AuditOptions& opt = {}) {
  const std::size_t n = cps.space().variable_count();
  if (n == 0) throw PreconditionError("the space has no variables");
  if (mode == SemigraphoidMode::exhaustive && n > 4) throw PreconditionError("exhaustive semigraphoid check needs n <= 4");
  if (n > 16) throw PreconditionError("at most 16 variables");

  using Bits = std::uint32_t;
  std::map<std::tuple<Bits, Bits, Bits>, bool> memo;
  auto vars = [&](Bits b) {
    VariableSet out;
    for (std::size_t i = 0; i < n; ++i)
      if ((b >> i) & 1U) out.push_back(i);
    return out;
  };
  auto indep = [&](Bits x, Bits y, Bits z) {
    auto key = std::make_tuple(x, y, z);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool r = indep_rv(cps, vars(x), vars(y), vars(z));
    memo.emplace(key, r);
    return r;
  };
  auto names = [&](Bits b) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i)
      if ((b >> i) & 1U) {
        if (!first) s += ',';
        s += cps.space().variable_name(i);
        first = false;
      }
    return s + "}";
  };

  std::array<std::size_t, 4> instances{};
  std::array<std::optional<Witness>, 4> failures;
  auto witness = [&](Bits x, Bits y, Bits y2, Bits z) {
    return Witness{}.value("X", names(x)).value("Y", names(y)).value("Y'", names(y2)).value("Z", names(z));
  };

  auto visit = [&](const std::vector<int>& roles) {
    Bits x = 0, y = 0, y2 = 0, z = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Bits bit = Bits{1} << i;
      switch (roles[i]) {
        case 1: x |= bit; break;
        case 2: y |= bit; break;
        case 3: y2 |= bit; break;
        case 4: z |= bit; break;
        default: break;
      }
    }
    if (!x || !y) return;
    if (!y2) {
      if (!failures[0] && indep(x, y, z)) {
        ++instances[0];
        if (!indep(y, x, z)) failures[0] = witness(x, y, y2, z);
      }
      return;
    }
    if (indep(x, y | y2, z)) {
      if (!failures[1]) {
        ++instances[1];
        if (!indep(x, y, z)) failures[1] = witness(x, y, y2, z);
      }
      if (!failures[2]) {
        ++instances[2];
        if (!indep(x, y, y2 | z)) failures[2] = witness(x, y, y2, z);
      }
    }
    if (!failures[3] && indep(x, y, z) && indep(x, y2, y | z)) {
      ++instances[3];
      if (!indep(x, y | y2, z)) failures[3] = witness(x, y, y2, z);
    }
  };

  std::vector<int> roles(n, 0);
  if (mode == SemigraphoidMode::exhaustive) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 5;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i) {
        roles[i] = static_cast<int>(c % 5);
        c /= 5;
      }
      visit(roles);
    }
  } else {
    Rng rng(opt.seed ^ 0xC1C1ULL);
    for (std::size_t k = 0; k < opt.samples; ++k) {
      for (auto& r : roles) r = static_cast<int>(below(rng, 5));
      visit(roles);
    }
  }

  std::vector<AxiomReport> out;
  for (std::size_t r = 0; r < 4; ++r) {
    std::string id = "CIRV" + std::to_string(r + 1);
    out.push_back(failures[r] ? AxiomReport::fail(id, instances[r], std::move(*failures[r]))
                              : AxiomReport::pass(id, instances[r]));
  }
  return out;
}

}  // namespace plausible
