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
#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plausible/errors.hpp"

namespace plausible {

/// A natural number or infinity.
class Rank {
 public:
  constexpr Rank() = default;
  constexpr explicit Rank(std::uint64_t value) : value_(value) {}

  static constexpr Rank infinity() {
    Rank r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }

  std::uint64_t value() const {
    if (infinite_) throw DomainError("infinite rank has no finite value");
    return value_;
  }

  /// Numeric order, infinity last.
  friend constexpr auto operator<=>(const Rank&, const Rank&) = default;

  friend Rank operator+(const Rank& a, const Rank& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    if (a.value_ > std::numeric_limits<std::uint64_t>::max() - b.value_) throw DomainError("rank overflow");
    return Rank(a.value_ + b.value_);
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  bool infinite_ = false;  // declared first so the defaulted order puts infinity last
  std::uint64_t value_ = 0;
};

/// N u {inf} under the reversed order: 0 is the top, inf the bottom;
/// oplus is min and otimes is +.
class RankingDomain {
 public:
  using value_type = Rank;

  std::string name() const { return "ranking"; }
  value_type bottom() const { return Rank::infinity(); }
  value_type top() const { return Rank(0); }
  bool leq(const value_type& a, const value_type& b) const { return b <= a; }
  bool in_carrier(const value_type&) const { return true; }

  bool in_dom_oplus(std::span<const value_type>) const { return true; }
  value_type oplus(std::span<const value_type> xs) const {
    Rank m = Rank::infinity();
    for (const auto& x : xs) m = std::min(m, x);
    return m;
  }

  bool in_dom_otimes(const value_type&, const value_type&) const { return true; }
  value_type otimes(const value_type& a, const value_type& b) const { return a + b; }

  std::optional<value_type> solve_otimes(const value_type& p, const value_type& c) const {
    if (c.is_infinite()) return std::nullopt;
    if (p.is_infinite()) return Rank::infinity();
    if (p < c) return std::nullopt;
    return Rank(p.value() - c.value());
  }

  std::vector<std::pair<value_type, value_type>> richness_candidates() const { return {{Rank(0), Rank(0)}}; }

  std::string format(const value_type& a) const { return a.to_string(); }
  value_type parse(std::string_view text) const {
    if (text == "inf" || text == "\xE2\x88\x9E") return Rank::infinity();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
      throw ValueError("not a rank literal: '" + std::string(text) + "'");
    return Rank(v);
  }

  friend bool operator==(const RankingDomain&, const RankingDomain&) = default;
};

}  // namespace plausible
