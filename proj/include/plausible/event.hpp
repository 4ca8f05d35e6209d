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

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "plausible/errors.hpp"

namespace plausible {

/// A subset of a finite world set {0, ..., universe-1}.
class Event {
 public:
  Event() = default;
  explicit Event(std::size_t universe) : bits_(universe) {}

  static Event full(std::size_t universe) {
    Event e(universe);
    e.bits_.set();
    return e;
  }

  static Event from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) throw PreconditionError("mask events need a universe of at most 64 worlds");
    if (universe < 64 && (mask >> universe) != 0) throw PreconditionError("mask has bits outside the universe");
    Event e(universe);
    for (std::size_t w = 0; w < universe; ++w)
      if ((mask >> w) & 1U) e.bits_.set(w);
    return e;
  }

  static Event of(std::size_t universe, std::initializer_list<std::size_t> worlds) {
    Event e(universe);
    for (auto w : worlds) e.insert(w);
    return e;
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool is_full() const noexcept { return bits_.all(); }

  bool contains(std::size_t world) const {
    check_world(world);
    return bits_.test(world);
  }

  Event& insert(std::size_t world) {
    check_world(world);
    bits_.set(world);
    return *this;
  }

  Event& erase(std::size_t world) {
    check_world(world);
    bits_.reset(world);
    return *this;
  }

  bool is_subset_of(const Event& other) const {
    same_universe(other);
    return bits_.is_subset_of(other.bits_);
  }

  bool intersects(const Event& other) const {
    same_universe(other);
    return bits_.intersects(other.bits_);
  }

  Event complement() const {
    Event e = *this;
    e.bits_.flip();
    return e;
  }

  Event& operator&=(const Event& other) {
    same_universe(other);
    bits_ &= other.bits_;
    return *this;
  }
  Event& operator|=(const Event& other) {
    same_universe(other);
    bits_ |= other.bits_;
    return *this;
  }
  Event& operator-=(const Event& other) {
    same_universe(other);
    bits_ -= other.bits_;
    return *this;
  }

  friend Event operator&(Event a, const Event& b) { return a &= b; }
  friend Event operator|(Event a, const Event& b) { return a |= b; }
  friend Event operator-(Event a, const Event& b) { return a -= b; }

  friend bool operator==(const Event& a, const Event& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const Event& a, const Event& b) {
    if (a.universe() != b.universe()) return a.universe() < b.universe();
    return a.bits_ < b.bits_;
  }

  std::uint64_t to_mask() const {
    if (universe() > 64) throw PreconditionError("event universe exceeds 64 worlds");
    std::uint64_t m = 0;
    for (auto w = bits_.find_first(); w != boost::dynamic_bitset<std::uint64_t>::npos; w = bits_.find_next(w))
      m |= std::uint64_t{1} << w;
    return m;
  }

  std::vector<std::size_t> worlds() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (auto w = bits_.find_first(); w != boost::dynamic_bitset<std::uint64_t>::npos; w = bits_.find_next(w))
      out.push_back(w);
    return out;
  }

  /// "{0,2,3}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto w : worlds()) {
      if (!first) s += ',';
      s += std::to_string(w);
      first = false;
    }
    return s + "}";
  }

 private:
  void check_world(std::size_t world) const {
    if (world >= universe()) throw PreconditionError("world index outside the universe");
  }
  void same_universe(const Event& other) const {
    if (universe() != other.universe()) throw PreconditionError("events over different universes");
  }

  boost::dynamic_bitset<std::uint64_t> bits_;
};

}  // namespace plausible
