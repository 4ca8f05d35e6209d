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

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "plausible/errors.hpp"

namespace plausible {

/// Exact rational numbers. Every numeric carrier is built on these.
using Rational = mpq_class;

inline Rational rational(long numerator, long denominator = 1) {
  if (denominator == 0) throw ValueError("zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

/// Lowest terms, "p/q" or "p" for integers.
inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

/// Accepts "p/q", integers and finite decimals ("0.125"), all converted
/// exactly.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { return ValueError("not a rational literal: '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();

  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    ++i;
  }
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t k = from; k < to; ++k)
      if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
    return true;
  };

  Rational q;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (!digits(i, slash) || !digits(slash + 1, text.size())) throw fail();
    mpz_class num(std::string(text.substr(i, slash - i)), 10);
    mpz_class den(std::string(text.substr(slash + 1)), 10);
    if (den == 0) throw ValueError("zero denominator in '" + std::string(text) + "'");
    q = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    bool int_part = dot == i || digits(i, dot);
    bool frac_part = dot + 1 == text.size() || digits(dot + 1, text.size());
    if (!int_part || !frac_part || text.size() - i == 1) throw fail();
    std::string all(text.substr(i, dot - i));
    std::string frac(text.substr(dot + 1));
    all += frac;
    if (all.empty()) throw fail();
    mpz_class num(all, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    q = Rational(num, den);
  } else {
    if (!digits(i, text.size())) throw fail();
    q = Rational(mpz_class(std::string(text.substr(i)), 10));
  }
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

}  // namespace plausible
