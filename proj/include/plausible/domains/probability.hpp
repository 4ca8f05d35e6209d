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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plausible/errors.hpp"
#include "plausible/rational.hpp"

namespace plausible {

/// [0,1] with + capped at 1 and ordinary multiplication.
class ProbabilityDomain {
 public:
  using value_type = Rational;

  std::string name() const { return "probability"; }
  value_type bottom() const { return 0; }
  value_type top() const { return 1; }
  bool leq(const value_type& a, const value_type& b) const { return a <= b; }
  bool in_carrier(const value_type& a) const { return 0 <= a && a <= 1; }

  bool in_dom_oplus(std::span<const value_type> xs) const {
    Rational sum = 0;
    for (const auto& x : xs) {
      if (!in_carrier(x)) return false;
      sum += x;
    }
    return sum <= 1;
  }

  value_type oplus(std::span<const value_type> xs) const {
    Rational sum = 0;
    for (const auto& x : xs) sum += x;
    return sum > 1 ? Rational(1) : sum;
  }

  bool in_dom_otimes(const value_type& a, const value_type& b) const { return in_carrier(a) && in_carrier(b); }
  value_type otimes(const value_type& a, const value_type& b) const { return a * b; }

  std::optional<value_type> solve_otimes(const value_type& p, const value_type& c) const {
    if (c == 0 || p > c) return std::nullopt;
    return Rational(p / c);
  }

  std::vector<std::pair<value_type, value_type>> richness_candidates() const {
    return {{rational(1, 2), rational(1, 2)}};
  }

  std::string format(const value_type& a) const { return to_string(a); }
  value_type parse(std::string_view text) const {
    auto v = parse_rational(text);
    if (!in_carrier(v)) throw ValueError("probability outside [0,1]: " + std::string(text));
    return v;
  }

  friend bool operator==(const ProbabilityDomain&, const ProbabilityDomain&) = default;
};

}  // namespace plausible
