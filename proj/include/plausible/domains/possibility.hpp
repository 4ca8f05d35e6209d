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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plausible/errors.hpp"
#include "plausible/rational.hpp"

namespace plausible {

enum class PossibilityConditioning { min, product };

/// [0,1] with max as oplus. The two conditioning notions differ only in
/// otimes: min (with a restricted Dom) or ordinary multiplication.
class PossibilityDomain {
 public:
  using value_type = Rational;

  explicit PossibilityDomain(PossibilityConditioning mode = PossibilityConditioning::min) : mode_(mode) {}

  PossibilityConditioning conditioning() const noexcept { return mode_; }

  std::string name() const {
    return mode_ == PossibilityConditioning::min ? "possibility_min" : "possibility_prod";
  }
  value_type bottom() const { return 0; }
  value_type top() const { return 1; }
  bool leq(const value_type& a, const value_type& b) const { return a <= b; }
  bool in_carrier(const value_type& a) const { return 0 <= a && a <= 1; }

  bool in_dom_oplus(std::span<const value_type> xs) const {
    return std::all_of(xs.begin(), xs.end(), [this](const value_type& x) { return in_carrier(x); });
  }
  value_type oplus(std::span<const value_type> xs) const {
    Rational m = 0;
    for (const auto& x : xs) m = std::max(m, x);
    return m;
  }

  /// For min: a < b or a = 1, plus the pair (0,0) so that bottom times
  /// anything is always admissible.
  bool in_dom_otimes(const value_type& a, const value_type& b) const {
    if (!in_carrier(a) || !in_carrier(b)) return false;
    if (mode_ == PossibilityConditioning::product) return true;
    return a < b || a == 1 || (a == 0 && b == 0);
  }

  value_type otimes(const value_type& a, const value_type& b) const {
    if (mode_ == PossibilityConditioning::product) return a * b;
    return std::min(a, b);
  }

  std::optional<value_type> solve_otimes(const value_type& p, const value_type& c) const {
    if (c == 0 || p > c) return std::nullopt;
    if (mode_ == PossibilityConditioning::product) return Rational(p / c);
    if (p == c) return Rational(1);
    return p;
  }

  std::vector<std::pair<value_type, value_type>> richness_candidates() const { return {{1, 1}}; }

  std::string format(const value_type& a) const { return to_string(a); }
  value_type parse(std::string_view text) const {
    auto v = parse_rational(text);
    if (!in_carrier(v)) throw ValueError("possibility outside [0,1]: " + std::string(text));
    return v;
  }

  friend bool operator==(const PossibilityDomain&, const PossibilityDomain&) = default;

 private:
  PossibilityConditioning mode_;
};

}  // namespace plausible
