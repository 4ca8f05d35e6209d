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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plausible/domain.hpp"
#include "plausible/errors.hpp"
#include "plausible/event.hpp"
#include "plausible/worlds.hpp"

namespace plausible {

/// A conditional plausibility space over F = 2^W. The conditioning family
/// is implicit: V is conditionable iff the evaluator is defined on (W, V),
/// and then it must be defined on (U, V) for every U.
template <PlausibilityDomain D>
class Cps {
 public:
  using domain_type = D;
  using value_type = value_of<D>;
  using Evaluator = std::function<std::optional<value_type>(const Event& u, const Event& v)>;

  Cps(D domain, WorldSpace space, Evaluator pl)
      : domain_(std::move(domain)), space_(std::move(space)), pl_(std::move(pl)) {
    if (!pl_) throw PreconditionError("cps without an evaluator");
  }

  const D& domain() const noexcept { return domain_; }
  const WorldSpace& space() const noexcept { return space_; }
  std::size_t world_count() const noexcept { return space_.size(); }
  Event all() const { return space_.all(); }
  Event none() const { return space_.none(); }

  bool conditionable(const Event& v) const { return pl(all(), v).has_value(); }

  std::optional<value_type> pl(const Event& u, const Event& v) const {
    if (u.universe() != world_count() || v.universe() != world_count())
      throw PreconditionError("event over the wrong universe");
    return pl_(u, v);
  }

  value_type at(const Event& u, const Event& v) const {
    auto r = pl(u, v);
    if (!r) throw UndefinedConditional("Pl(" + space_.format(u) + " | " + space_.format(v) + ") is undefined");
    return *std::move(r);
  }

  value_type unconditional(const Event& u) const { return at(u, all()); }

 private:
  D domain_;
  WorldSpace space_;
  Evaluator pl_;
};

namespace detail {

/// Memoizing view of a cps with events addressed as bitmasks. Used by the
/// auditors, which query the same (U, V) pairs many times.
template <PlausibilityDomain D>
class Probe {
 public:
  using Mask = std::uint64_t;
  using value_type = value_of<D>;

  explicit Probe(const Cps<D>& cps) : cps_(cps), n_(cps.world_count()) {
    if (n_ > 31) throw PreconditionError("audits support at most 31 worlds");
    full_ = (Mask{1} << n_) - 1;
    dense_ = n_ <= 7;
    if (dense_) {
      cells_.resize(std::size_t{1} << (2 * n_));
      state_.assign(std::size_t{1} << (2 * n_), 0);
      row_.assign(std::size_t{1} << n_, 0);
    }
  }

  const Cps<D>& cps() const noexcept { return cps_; }
  const D& domain() const noexcept { return cps_.domain(); }
  std::size_t worlds() const noexcept { return n_; }
  Mask full() const noexcept { return full_; }
  Event event(Mask m) const { return Event::from_mask(n_, m); }
  std::string format(Mask m) const { return cps_.space().format(event(m)); }

  bool conditionable(Mask v) {
    if (dense_) {
      auto& s = row_[v];
      if (s == 0) s = cps_.pl(event(full_), event(v)) ? 2 : 1;
      return s == 2;
    }
    auto it = rows_.find(v);
    if (it == rows_.end()) it = rows_.emplace(v, cps_.pl(event(full_), event(v)).has_value()).first;
    return it->second;
  }

  /// nullptr when V is not conditionable. Throws MalformedCps when the
  /// evaluator's definedness depends on U.
  const value_type* value(Mask u, Mask v) {
    bool cond = conditionable(v);
    if (dense_) {
      std::size_t k = (static_cast<std::size_t>(v) << n_) | u;
      if (state_[k] == 0) {
        auto r = cps_.pl(event(u), event(v));
        check_definedness(r.has_value(), cond, u, v);
        if (r) cells_[k] = std::move(*r);
        state_[k] = r ? 2 : 1;
      }
      return state_[k] == 2 ? &*cells_[k] : nullptr;
    }
    Mask k = (v << n_) | u;
    auto it = sparse_.find(k);
    if (it == sparse_.end()) {
      auto r = cps_.pl(event(u), event(v));
      check_definedness(r.has_value(), cond, u, v);
      it = sparse_.emplace(k, std::move(r)).first;
    }
    return it->second ? &*it->second : nullptr;
  }

 private:
  void check_definedness(bool defined, bool cond, Mask u, Mask v) const {
    if (defined != cond)
      throw MalformedCps("Pl(" + format(u) + " | " + format(v) + ") is " + (defined ? "defined" : "undefined") +
                         " although Pl(W | " + format(v) + ") is " + (cond ? "defined" : "undefined"));
  }

  const Cps<D>& cps_;
  std::size_t n_;
  Mask full_ = 0;
  bool dense_ = false;
  std::vector<std::optional<value_type>> cells_;
  std::vector<std::uint8_t> state_;
  std::vector<std::uint8_t> row_;
  std::unordered_map<Mask, bool> rows_;
  std::unordered_map<Mask, std::optional<value_type>> sparse_;
};

}  // namespace detail
}  // namespace plausible
