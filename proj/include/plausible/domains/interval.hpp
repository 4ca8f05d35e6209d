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

#include <string>
#include <string_view>
#include <tuple>

#include "plausible/errors.hpp"
#include "plausible/rational.hpp"

namespace plausible {

/// A lower/upper probability pair.
struct IntervalValue {
  Rational lower;
  Rational upper;

  friend bool operator==(const IntervalValue& a, const IntervalValue& b) {
    return a.lower == b.lower && a.upper == b.upper;
  }
  friend bool operator<(const IntervalValue& a, const IntervalValue& b) {
    return std::tie(a.lower, a.upper) < std::tie(b.lower, b.upper);
  }
};

/// Intervals [l,u] within [0,1], ordered by x <= y iff x == y or x.upper <=
/// y.lower. No addition or multiplication: conditional lower and upper
/// probability is not algebraic.
class IntervalDomain {
 public:
  using value_type = IntervalValue;

  std::string name() const { return "interval"; }
  value_type bottom() const { return {0, 0}; }
  value_type top() const { return {1, 1}; }
  bool in_carrier(const value_type& a) const { return 0 <= a.lower && a.lower <= a.upper && a.upper <= 1; }
  bool leq(const value_type& a, const value_type& b) const { return a == b || a.upper <= b.lower; }

  std::string format(const value_type& a) const { return "[" + to_string(a.lower) + "," + to_string(a.upper) + "]"; }
  value_type parse(std::string_view text) const {
    if (text.size() < 5 || text.front() != '[' || text.back() != ']')
      throw ValueError("not an interval literal: '" + std::string(text) + "'");
    auto body = text.substr(1, text.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string_view::npos) throw ValueError("not an interval literal: '" + std::string(text) + "'");
    value_type v{parse_rational(body.substr(0, comma)), parse_rational(body.substr(comma + 1))};
    if (!in_carrier(v)) throw ValueError("interval outside [0,1] or reversed: " + std::string(text));
    return v;
  }

  friend bool operator==(const IntervalDomain&, const IntervalDomain&) = default;
};

/// Plain [0,1] under <=, with no algebra attached. Carries lower (or
/// upper) probability alone.
class UnitIntervalDomain {
 public:
  using value_type = Rational;

  std::string name() const { return "unit_interval"; }
  value_type bottom() const { return 0; }
  value_type top() const { return 1; }
  bool in_carrier(const value_type& a) const { return 0 <= a && a <= 1; }
  bool leq(const value_type& a, const value_type& b) const { return a <= b; }

  std::string format(const value_type& a) const { return to_string(a); }
  value_type parse(std::string_view text) const {
    auto v = parse_rational(text);
    if (!in_carrier(v)) throw ValueError("value outside [0,1]: " + std::string(text));
    return v;
  }

  friend bool operator==(const UnitIntervalDomain&, const UnitIntervalDomain&) = default;
};

}  // namespace plausible
