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

namespace plausible::io {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

using Line = std::vector<Token>;

/// Splits text into whitespace-separated tokens, one vector per nonblank
/// line. `#` starts a comment that runs to the end of the line. Lines and
/// columns are 1-based.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t line = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(pos, end - pos);
    if (auto hash = row.find('#'); hash != std::string_view::npos) row = row.substr(0, hash);
    Line tokens;
    std::size_t i = 0;
    while (i < row.size()) {
      while (i < row.size() && (row[i] == ' ' || row[i] == '\t' || row[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < row.size() && row[i] != ' ' && row[i] != '\t' && row[i] != '\r') ++i;
      if (i > start) tokens.push_back({std::string(row.substr(start, i - start)), line, start + 1});
    }
    if (!tokens.empty()) out.push_back(std::move(tokens));
    pos = end + 1;
    ++line;
  }
  return out;
}

[[noreturn]] inline void fail_at(const Token& t, const std::string& message) {
  throw ParseError(message, t.line, t.column);
}

inline void expect_arity(const Line& l, std::size_t min, std::size_t max) {
  if (l.size() < min) fail_at(l.back(), "'" + l.front().text + "' needs more arguments");
  if (l.size() > max) fail_at(l[max], "unexpected token '" + l[max].text + "'");
}

}  // namespace plausible::io
