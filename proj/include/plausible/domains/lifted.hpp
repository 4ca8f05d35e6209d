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
#include <utility>

#include "plausible/domain.hpp"
#include "plausible/event.hpp"

namespace plausible {

/// Value of a conditional plausibility obtained by tagging an unconditional
/// value with the conditioning event, plus fresh bottom and top.
template <typename V>
struct LiftedValue {
  enum class Kind { bottom, pair, top };

  Kind kind = Kind::bottom;
  V value{};
  Event given;

  static LiftedValue bottom() { return {}; }
  static LiftedValue top() { return {Kind::top, V{}, Event{}}; }
  static LiftedValue pair(V d, Event v) { return {Kind::pair, std::move(d), std::move(v)}; }

  friend bool operator==(const LiftedValue& a, const LiftedValue& b) {
    if (a.kind != b.kind) return false;
    return a.kind != Kind::pair || (a.value == b.value && a.given == b.given);
  }
  friend bool operator<(const LiftedValue& a, const LiftedValue& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.kind != Kind::pair) return false;
    if (!(a.given == b.given)) return a.given < b.given;
    return a.value < b.value;
  }
};

/// Pairs (d, V) are comparable only when they share V; bottom and top
/// bracket everything.
template <PlausibilityDomain D>
class LiftedDomain {
 public:
  using base_value = value_of<D>;
  using value_type = LiftedValue<base_value>;

  explicit LiftedDomain(D base) : base_(std::move(base)) {}

  const D& base() const noexcept { return base_; }

  std::string name() const { return "lifted_" + base_.name(); }
  value_type bottom() const { return value_type::bottom(); }
  value_type top() const { return value_type::top(); }
  bool in_carrier(const value_type& a) const { return a.kind != value_type::Kind::pair || base_.in_carrier(a.value); }

  bool leq(const value_type& a, const value_type& b) const {
    if (a.kind == value_type::Kind::bottom || b.kind == value_type::Kind::top) return true;
    if (a.kind == value_type::Kind::top || b.kind == value_type::Kind::bottom) return false;
    return a.given == b.given && base_.leq(a.value, b.value);
  }

  std::string format(const value_type& a) const {
    switch (a.kind) {
      case value_type::Kind::bottom:
        return "bot";
      case value_type::Kind::top:
        return "top";
      default:
        return "(" + base_.format(a.value) + "|" + a.given.to_string() + ")";
    }
  }

  friend bool operator==(const LiftedDomain&, const LiftedDomain&) = default;

 private:
  D base_;
};

}  // namespace plausible
