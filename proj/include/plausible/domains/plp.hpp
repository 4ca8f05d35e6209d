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
#include <utility>
#include <vector>

#include "plausible/errors.hpp"
#include "plausible/rational.hpp"

namespace plausible {

/// One coordinate of a plp vector: a number in [0,1], or nullopt for `*`
/// (the corresponding measure could not be conditioned).
using PlpEntry = std::optional<Rational>;

/// Element of the plp value set: a vector indexed by the members of a
/// family of probability measures, or one of the two distinguished
/// constants. Vectors equivalent to bottom (entries in {0,*}) or to top
/// (entries in {1,*}) are collapsed at construction.
class PlpValue {
 public:
  enum class Kind { bottom, top, vector };

  PlpValue() = default;  // bottom

  static PlpValue bottom() { return PlpValue(Kind::bottom); }
  static PlpValue top() { return PlpValue(Kind::top); }

  static PlpValue from_entries(std::vector<PlpEntry> entries) {
    if (entries.empty()) throw ValueError("plp vector over an empty index set");
    bool any_value = false, zero_or_star = true, one_or_star = true;
    for (const auto& e : entries) {
      if (!e) continue;
      any_value = true;
      if (*e < 0 || *e > 1) throw ValueError("plp entry outside [0,1]");
      if (*e != 0) zero_or_star = false;
      if (*e != 1) one_or_star = false;
    }
    if (!any_value) throw ValueError("plp vector with every entry '*'");
    if (zero_or_star) return bottom();
    if (one_or_star) return top();
    PlpValue v(Kind::vector);
    v.entries_ = std::move(entries);
    return v;
  }

  Kind kind() const noexcept { return kind_; }
  bool is_bottom() const noexcept { return kind_ == Kind::bottom; }
  bool is_top() const noexcept { return kind_ == Kind::top; }
  bool is_vector() const noexcept { return kind_ == Kind::vector; }
  const std::vector<PlpEntry>& entries() const noexcept { return entries_; }

  friend bool operator==(const PlpValue&, const PlpValue&) = default;

  friend bool operator<(const PlpValue& a, const PlpValue& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
                                        [](const PlpEntry& x, const PlpEntry& y) {
                                          if (!x || !y) return !x && y.has_value();
                                          return *x < *y;
                                        });
  }

 private:
  explicit PlpValue(Kind k) : kind_(k) {}

  Kind kind_ = Kind::bottom;
  std::vector<PlpEntry> entries_;
};

/// Pointwise capped sum and product over vectors indexed by a finite set
/// I = {0, ..., index_count-1}, with `*` propagating through sums and
/// annihilating numbers in products.
class PlpDomain {
 public:
  using value_type = PlpValue;

  explicit PlpDomain(std::size_t index_count) : n_(index_count) {
    if (n_ == 0) throw ConfigurationError("plp domain needs a nonempty index set");
  }

  std::size_t index_count() const noexcept { return n_; }

  std::string name() const { return "plp"; }
  value_type bottom() const { return PlpValue::bottom(); }
  value_type top() const { return PlpValue::top(); }

  bool in_carrier(const value_type& a) const { return !a.is_vector() || a.entries().size() == n_; }

  bool leq(const value_type& a, const value_type& b) const {
    if (a.is_bottom() || b.is_top()) return true;
    if (a.is_top() || b.is_bottom()) return false;
    for (std::size_t i = 0; i < n_; ++i) {
      const auto& x = a.entries()[i];
      const auto& y = b.entries()[i];
      if (x.has_value() != y.has_value()) return false;
      if (x && *x > *y) return false;
    }
    return true;
  }

  bool in_dom_oplus(std::span<const value_type> xs) const {
    std::size_t tops = 0;
    for (const auto& x : xs) {
      if (!in_carrier(x)) return false;
      if (x.is_top()) ++tops;
    }
    if (tops > 0) {
      return tops == 1 && std::all_of(xs.begin(), xs.end(), [](const value_type& x) { return x.is_top() || x.is_bottom(); });
    }
    const value_type* pattern = nullptr;
    std::vector<Rational> sums(n_, 0);
    for (const auto& x : xs) {
      if (x.is_bottom()) continue;
      if (pattern == nullptr) {
        pattern = &x;
      } else {
        for (std::size_t i = 0; i < n_; ++i)
          if (x.entries()[i].has_value() != pattern->entries()[i].has_value()) return false;
      }
      for (std::size_t i = 0; i < n_; ++i)
        if (x.entries()[i]) sums[i] += *x.entries()[i];
    }
    return std::all_of(sums.begin(), sums.end(), [](const Rational& s) { return s <= 1; });
  }

  /// Total except where the result would be an all-`*` vector.
  value_type oplus(std::span<const value_type> xs) const {
    std::vector<PlpEntry> acc;
    for (const auto& x : xs) {
      check(x);
      if (x.is_top()) return top();
      if (x.is_bottom()) continue;
      if (acc.empty()) {
        acc = x.entries();
        continue;
      }
      for (std::size_t i = 0; i < n_; ++i) {
        if (!acc[i] || !x.entries()[i]) {
          acc[i].reset();
        } else {
          *acc[i] += *x.entries()[i];
          if (*acc[i] > 1) acc[i] = Rational(1);
        }
      }
    }
    if (acc.empty()) return bottom();
    if (std::none_of(acc.begin(), acc.end(), [](const PlpEntry& e) { return e.has_value(); }))
      throw DomainError("plp sum with mismatched '*' positions has no value");
    return PlpValue::from_entries(std::move(acc));
  }

  bool in_dom_otimes(const value_type& f, const value_type& g) const {
    if (!in_carrier(f) || !in_carrier(g)) return false;
    if (!f.is_vector() || !g.is_vector()) return true;
    for (std::size_t i = 0; i < n_; ++i) {
      const auto& gi = g.entries()[i];
      bool g_zero_or_star = !gi || *gi == 0;
      if (g_zero_or_star != !f.entries()[i].has_value()) return false;
    }
    return true;
  }

  value_type otimes(const value_type& f, const value_type& g) const {
    check(f);
    check(g);
    if (g.is_top()) return f;
    if (f.is_top()) return g;
    if (f.is_bottom() || g.is_bottom()) return bottom();
    std::vector<PlpEntry> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const auto& a = f.entries()[i];
      const auto& b = g.entries()[i];
      if (!a && !b) continue;
      out[i] = (a && b) ? Rational(*a * *b) : Rational(0);
    }
    return PlpValue::from_entries(std::move(out));
  }

  /// Entrywise division; `*` wherever the divisor is 0 or `*`. The
  /// candidate is accepted only if multiplying back reproduces `product`.
  std::optional<value_type> solve_otimes(const value_type& product, const value_type& divisor) const {
    check(product);
    check(divisor);
    if (divisor.is_bottom()) return std::nullopt;
    if (divisor.is_top()) return product;
    if (product.is_bottom()) return bottom();
    if (product.is_top()) return std::nullopt;
    std::vector<PlpEntry> out(n_);
    bool any = false;
    for (std::size_t i = 0; i < n_; ++i) {
      const auto& c = divisor.entries()[i];
      if (!c || *c == 0) continue;
      const auto& p = product.entries()[i];
      if (!p || *p > *c) return std::nullopt;
      out[i] = Rational(*p / *c);
      any = true;
    }
    if (!any) return std::nullopt;
    auto candidate = PlpValue::from_entries(std::move(out));
    if (!in_dom_otimes(candidate, divisor) || !(otimes(candidate, divisor) == product)) return std::nullopt;
    return candidate;
  }

  std::vector<std::pair<value_type, value_type>> richness_candidates() const {
    auto half = PlpValue::from_entries(std::vector<PlpEntry>(n_, PlpEntry(rational(1, 2))));
    return {{half, half}};
  }

  /// "bot", "top" or a comma list such as "1/2,*,1/4".
  std::string format(const value_type& a) const {
    if (a.is_bottom()) return "bot";
    if (a.is_top()) return "top";
    std::string s;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
      if (i) s += ',';
      s += a.entries()[i] ? to_string(*a.entries()[i]) : "*";
    }
    return s;
  }

  value_type parse(std::string_view text) const {
    if (text == "bot" || text == "\xE2\x8A\xA5") return bottom();
    if (text == "top" || text == "\xE2\x8A\xA4") return top();
    std::vector<PlpEntry> entries;
    std::size_t start = 0;
    while (true) {
      auto comma = text.find(',', start);
      auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      if (piece == "*") {
        entries.emplace_back();
      } else {
        entries.emplace_back(parse_rational(piece));
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (entries.size() != n_)
      throw ValueError("plp vector has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(n_));
    return PlpValue::from_entries(std::move(entries));
  }

  friend bool operator==(const PlpDomain&, const PlpDomain&) = default;

 private:
  void check(const value_type& a) const {
    if (!in_carrier(a)) throw DomainError("plp vector of the wrong length");
  }

  std::size_t n_;
};

}  // namespace plausible
