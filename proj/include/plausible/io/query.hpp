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
#include <string>
#include <string_view>
#include <vector>

#include "plausible/errors.hpp"
#include "plausible/event.hpp"
#include "plausible/worlds.hpp"

namespace plausible::io {

/// The three parts of "A ; B | C", each with its 1-based column. The
/// "| C" part is optional.
struct QueryParts {
  struct Part {
    std::string text;
    std::size_t column = 1;
  };
  Part left, right, given;
};

namespace detail {

inline QueryParts::Part trimmed(std::string_view q, std::size_t begin, std::size_t end) {
  while (begin < end && (q[begin] == ' ' || q[begin] == '\t')) ++begin;
  while (end > begin && (q[end - 1] == ' ' || q[end - 1] == '\t')) --end;
  return {std::string(q.substr(begin, end - begin)), begin + 1};
}

inline std::vector<QueryParts::Part> split_list(const QueryParts::Part& p) {
  std::vector<QueryParts::Part> out;
  std::size_t i = 0;
  const auto& s = p.text;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ',' || s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ',' && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back({s.substr(start, i - start), p.column + start});
  }
  return out;
}

}  // namespace detail

inline QueryParts split_query(std::string_view q) {
  auto semi = q.find(';');
  if (semi == std::string_view::npos) throw ParseError("query needs 'A ; B'", 1, q.size() + 1);
  if (q.find(';', semi + 1) != std::string_view::npos) throw ParseError("more than one ';'", 1, q.find(';', semi + 1) + 1);
  auto bar = q.find('|', semi);
  if (q.substr(0, semi).find('|') != std::string_view::npos) throw ParseError("'|' before ';'", 1, q.find('|') + 1);
  QueryParts p;
  p.left = detail::trimmed(q, 0, semi);
  p.right = detail::trimmed(q, semi + 1, bar == std::string_view::npos ? q.size() : bar);
  p.given = bar == std::string_view::npos ? QueryParts::Part{"", q.size() + 1} : detail::trimmed(q, bar + 1, q.size());
  if (p.left.text.empty()) throw ParseError("empty left side", 1, p.left.column);
  if (p.right.text.empty()) throw ParseError("empty right side", 1, p.right.column);
  return p;
}

/// Names in a comma or space separated list, resolved by `find` (which
/// returns an optional index).
template <typename Find>
std::vector<std::size_t> parse_name_list(const QueryParts::Part& p, Find&& find) {
  std::vector<std::size_t> out;
  for (const auto& item : detail::split_list(p)) {
    auto v = find(item.text);
    if (!v) throw ParseError("unknown name '" + item.text + "'", 1, item.column);
    for (auto u : out)
      if (u == *v) throw ParseError("'" + item.text + "' listed twice", 1, item.column);
    out.push_back(*v);
  }
  return out;
}

/// An event: `W` or `*` for every world, `{w1,w2}` for a world list (`{}`
/// is empty), or an assignment conjunction such as `X1=1&X2=0`.
inline Event parse_event(const QueryParts::Part& p, const WorldSpace& s) {
  const auto& t = p.text;
  if (t == "W" || t == "*") return s.all();
  if (!t.empty() && t.front() == '{') {
    if (t.back() != '}') throw ParseError("world list must end with '}'", 1, p.column + t.size() - 1);
    Event e = s.none();
    QueryParts::Part inner{t.substr(1, t.size() - 2), p.column + 1};
    for (auto w : parse_name_list(inner, [&](const std::string& n) { return s.find_world(n); })) e.insert(w);
    return e;
  }
  if (!s.has_variables()) throw ParseError("assignments need a variable space", 1, p.column);
  Event e = s.all();
  std::size_t start = 0;
  while (start <= t.size()) {
    auto amp = t.find('&', start);
    if (amp == std::string::npos) amp = t.size();
    auto atom = t.substr(start, amp - start);
    auto eq = atom.find('=');
    std::size_t col = p.column + start;
    if (eq == std::string::npos || eq + 2 != atom.size() || (atom[eq + 1] != '0' && atom[eq + 1] != '1'))
      throw ParseError("expected <variable>=0 or <variable>=1, got '" + atom + "'", 1, col);
    auto v = s.find_variable(atom.substr(0, eq));
    if (!v) throw ParseError("unknown variable '" + atom.substr(0, eq) + "'", 1, col);
    e &= s.assignment(*v, atom[eq + 1] - '0');
    start = amp + 1;
  }
  return e;
}

}  // namespace plausible::io
