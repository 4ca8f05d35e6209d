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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plausible/errors.hpp"
#include "plausible/event.hpp"

namespace plausible {

/// Index of a binary random variable within a WorldSpace.
using Variable = std::size_t;
using VariableSet = std::vector<Variable>;

/// A finite set of named worlds. A space built from binary variables has
/// 2^n worlds; the world with index w assigns bit (n-1-i) of w to variable
/// i, so its name lists the values of the variables in declaration order.
class WorldSpace {
 public:
  WorldSpace() = default;

  static WorldSpace named(std::vector<std::string> worlds) {
    if (worlds.empty()) throw PreconditionError("a world space needs at least one world");
    auto sorted = worlds;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw PreconditionError("duplicate world name");
    WorldSpace s;
    s.worlds_ = std::move(worlds);
    return s;
  }

  static WorldSpace binary(std::vector<std::string> variables) {
    if (variables.size() > 20) throw PreconditionError("at most 20 binary variables are supported");
    auto sorted = variables;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw PreconditionError("duplicate variable name");
    WorldSpace s;
    s.variables_ = std::move(variables);
    const std::size_t n = s.variables_.size();
    s.worlds_.reserve(std::size_t{1} << n);
    for (std::size_t w = 0; w < (std::size_t{1} << n); ++w) {
      std::string name(n, '0');
      for (std::size_t i = 0; i < n; ++i)
        if ((w >> (n - 1 - i)) & 1U) name[i] = '1';
      s.worlds_.push_back(std::move(name));
    }
    return s;
  }

  /// Binary space with variables X1..Xn.
  static WorldSpace binary(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
    return binary(std::move(names));
  }

  std::size_t size() const noexcept { return worlds_.size(); }
  const std::string& world_name(std::size_t w) const { return worlds_.at(w); }
  const std::vector<std::string>& world_names() const noexcept { return worlds_; }

  std::optional<std::size_t> find_world(std::string_view name) const {
    auto it = std::find(worlds_.begin(), worlds_.end(), name);
    if (it == worlds_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - worlds_.begin());
  }

  bool has_variables() const noexcept { return !variables_.empty(); }
  std::size_t variable_count() const noexcept { return variables_.size(); }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::string& variable_name(Variable v) const { return variables_.at(v); }

  std::optional<Variable> find_variable(std::string_view name) const {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) return std::nullopt;
    return static_cast<Variable>(it - variables_.begin());
  }

  Variable variable(std::string_view name) const {
    auto v = find_variable(name);
    if (!v) throw PreconditionError("unknown variable '" + std::string(name) + "'");
    return *v;
  }

  int value(std::size_t world, Variable v) const {
    if (v >= variables_.size()) throw PreconditionError("variable index out of range");
    return static_cast<int>((world >> (variables_.size() - 1 - v)) & 1U);
  }

  Event none() const { return Event(size()); }
  Event all() const { return Event::full(size()); }

  /// The event X = x for a single variable.
  Event assignment(Variable v, int x) const {
    Event e(size());
    for (std::size_t w = 0; w < size(); ++w)
      if (value(w, v) == x) e.insert(w);
    return e;
  }

  /// The event {w : vars(w) = values}, with values[k] giving the value of
  /// vars[k]. An empty variable list gives W.
  Event assignment(std::span<const Variable> vars, std::span<const int> values) const {
    if (vars.size() != values.size()) throw PreconditionError("assignment arity mismatch");
    Event e(size());
    for (std::size_t w = 0; w < size(); ++w) {
      bool match = true;
      for (std::size_t k = 0; k < vars.size() && match; ++k) match = value(w, vars[k]) == values[k];
      if (match) e.insert(w);
    }
    return e;
  }

  /// Same as above with the values packed into the bits of `code`, first
  /// variable most significant.
  Event assignment_code(std::span<const Variable> vars, std::size_t code) const {
    std::vector<int> values(vars.size());
    for (std::size_t k = 0; k < vars.size(); ++k) values[k] = static_cast<int>((code >> (vars.size() - 1 - k)) & 1U);
    return assignment(vars, values);
  }

  std::vector<std::string> names_of(const Event& e) const {
    std::vector<std::string> out;
    for (auto w : e.worlds()) out.push_back(worlds_.at(w));
    return out;
  }

  /// "{a,b}" using world names.
  std::string format(const Event& e) const {
    std::string s = "{";
    bool first = true;
    for (auto w : e.worlds()) {
      if (!first) s += ',';
      s += worlds_.at(w);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const WorldSpace&, const WorldSpace&) = default;

 private:
  std::vector<std::string> worlds_;
  std::vector<std::string> variables_;
};

}  // namespace plausible
