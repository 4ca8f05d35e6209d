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

#include <concepts>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace plausible {

/// A partially ordered set of plausibility values with least and greatest
/// elements. Values need structural equality and a structural strict
/// order (any total order, used only for containers).
template <typename D>
concept PlausibilityDomain = requires(const D& d, const typename D::value_type& a, const typename D::value_type& b) {
  typename D::value_type;
  { d.bottom() } -> std::convertible_to<typename D::value_type>;
  { d.top() } -> std::convertible_to<typename D::value_type>;
  { d.leq(a, b) } -> std::convertible_to<bool>;
  { d.in_carrier(a) } -> std::convertible_to<bool>;
  { d.name() } -> std::convertible_to<std::string>;
  { d.format(a) } -> std::convertible_to<std::string>;
  { a == b } -> std::convertible_to<bool>;
  { a < b } -> std::convertible_to<bool>;
};

/// A domain with the plausibilistic addition and multiplication and the
/// sets on which they are required to behave.
template <typename D>
concept AlgebraicDomain =
    PlausibilityDomain<D> &&
    requires(const D& d, std::span<const typename D::value_type> xs, const typename D::value_type& a) {
      { d.in_dom_oplus(xs) } -> std::convertible_to<bool>;
      { d.oplus(xs) } -> std::convertible_to<typename D::value_type>;
      { d.in_dom_otimes(a, a) } -> std::convertible_to<bool>;
      { d.otimes(a, a) } -> std::convertible_to<typename D::value_type>;
      { d.richness_candidates() } -> std::convertible_to<std::vector<std::pair<typename D::value_type, typename D::value_type>>>;
    };

/// An algebraic domain that can divide: solve_otimes(p, c) returns some d
/// with (d, c) in Dom(otimes) and d (x) c = p, when one exists.
template <typename D>
concept SolvableDomain = AlgebraicDomain<D> && requires(const D& d, const typename D::value_type& a) {
  { d.solve_otimes(a, a) } -> std::convertible_to<std::optional<typename D::value_type>>;
};

template <PlausibilityDomain D>
using value_of = typename D::value_type;

template <PlausibilityDomain D>
bool less_than(const D& d, const value_of<D>& a, const value_of<D>& b) {
  return d.leq(a, b) && !(a == b);
}

template <AlgebraicDomain D>
bool in_dom_oplus2(const D& d, const value_of<D>& a, const value_of<D>& b) {
  const value_of<D> xs[] = {a, b};
  return d.in_dom_oplus(std::span<const value_of<D>>(xs));
}

template <AlgebraicDomain D>
value_of<D> oplus2(const D& d, const value_of<D>& a, const value_of<D>& b) {
  const value_of<D> xs[] = {a, b};
  return d.oplus(std::span<const value_of<D>>(xs));
}

template <AlgebraicDomain D>
value_of<D> oplus_all(const D& d, const std::vector<value_of<D>>& xs) {
  return d.oplus(std::span<const value_of<D>>(xs));
}

template <AlgebraicDomain D>
bool in_dom_oplus_all(const D& d, const std::vector<value_of<D>>& xs) {
  return d.in_dom_oplus(std::span<const value_of<D>>(xs));
}

}  // namespace plausible
