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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plausible/domains/possibility.hpp"
#include "plausible/domains/probability.hpp"
#include "plausible/domains/ranking.hpp"
#include "plausible/errors.hpp"
#include "plausible/io/tokens.hpp"
#include "plausible/measures.hpp"
#include "plausible/worlds.hpp"

namespace plausible::io {

/// Canonical domain kind for a name or alias, or nullopt.
inline std::optional<std::string> canonical_kind(std::string_view name) {
  if (name == "probability" || name == "prob") return "probability";
  if (name == "ranking" || name == "rank" || name == "kappa") return "ranking";
  if (name == "possibility_min" || name == "poss_min") return "possibility_min";
  if (name == "possibility_prod" || name == "poss_prod") return "possibility_prod";
  if (name == "plp") return "plp";
  if (name == "lower_probability" || name == "lower") return "lower_probability";
  return std::nullopt;
}

/// A parsed measure file. Grammar, one statement per line:
///
///     domain <kind> [<index count>]
///     variables <name>...      (binary variables; worlds are bit strings)
///     worlds <name>...         (alternatively, named worlds)
///     index <i>                (plp and lower_probability: starts member i)
///     (<world>) <value>
///
/// `#` starts a comment. Worlds that are not listed get the bottom value
/// of the domain (weight 0, rank inf, degree 0).
struct MeasureFile {
  struct Entry {
    std::size_t world = 0;
    Token value;
  };
  std::string kind;
  Token kind_token;
  std::optional<std::size_t> declared_indices;
  WorldSpace space;
  std::vector<std::vector<Entry>> blocks;

  bool is_set() const { return kind == "plp" || kind == "lower_probability"; }
};

inline MeasureFile parse_measure_file(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty measure file", 1, 1);
  MeasureFile mf;
  bool have_space = false;
  std::optional<std::size_t> current;
  for (const auto& l : lines) {
    const auto& head = l.front();
    if (head.text == "domain") {
      if (!mf.kind.empty()) fail_at(head, "domain declared twice");
      expect_arity(l, 2, 3);
      auto k = canonical_kind(l[1].text);
      if (!k) fail_at(l[1], "unknown domain '" + l[1].text + "'");
      mf.kind = *k;
      mf.kind_token = l[1];
      if (l.size() == 3) {
        try {
          mf.declared_indices = std::stoul(l[2].text);
        } catch (const std::exception&) {
          fail_at(l[2], "not an index count: '" + l[2].text + "'");
        }
      }
    } else if (head.text == "variables" || head.text == "worlds") {
      if (have_space) fail_at(head, "worlds declared twice");
      if (l.size() < 2) fail_at(head, "'" + head.text + "' needs at least one name");
      std::vector<std::string> names;
      for (std::size_t i = 1; i < l.size(); ++i) names.push_back(l[i].text);
      try {
        mf.space = head.text == "variables" ? WorldSpace::binary(names) : WorldSpace::named(names);
      } catch (const PreconditionError& e) {
        fail_at(head, e.what());
      }
      have_space = true;
    } else if (head.text == "index") {
      expect_arity(l, 2, 2);
      std::size_t i = 0;
      try {
        i = std::stoul(l[1].text);
      } catch (const std::exception&) {
        fail_at(l[1], "not an index: '" + l[1].text + "'");
      }
      if (i != mf.blocks.size()) fail_at(l[1], "index blocks must be numbered 0, 1, ... in order");
      mf.blocks.emplace_back();
      current = i;
    } else if (head.text.size() >= 2 && head.text.front() == '(' && head.text.back() == ')') {
      if (mf.kind.empty()) fail_at(head, "world entry before the domain line");
      if (!have_space) fail_at(head, "world entry before the variables or worlds line");
      expect_arity(l, 2, 2);
      auto name = head.text.substr(1, head.text.size() - 2);
      auto w = mf.space.find_world(name);
      if (!w) fail_at(head, "unknown world '" + name + "'");
      if (!current) {
        if (mf.is_set()) fail_at(head, "an 'index' line must precede entries for " + mf.kind);
        mf.blocks.emplace_back();
        current = 0;
      }
      for (const auto& e : mf.blocks[*current])
        if (e.world == *w) fail_at(head, "world '" + name + "' listed twice");
      mf.blocks[*current].push_back({*w, l[1]});
    } else {
      fail_at(head, "unexpected '" + head.text + "'");
    }
  }
  if (mf.kind.empty()) throw ParseError("missing 'domain' line", 1, 1);
  if (!have_space) throw ParseError("missing 'variables' or 'worlds' line", 1, 1);
  if (mf.blocks.empty()) mf.blocks.emplace_back();
  if (mf.declared_indices && mf.is_set() && *mf.declared_indices != mf.blocks.size())
    fail_at(mf.kind_token, "declared " + std::to_string(*mf.declared_indices) + " indices but found " +
                               std::to_string(mf.blocks.size()));
  return mf;
}

namespace detail {

template <typename D>
std::vector<value_of<D>> block_values(const D& d, const MeasureFile& mf, std::size_t block) {
  std::vector<value_of<D>> out(mf.space.size(), d.bottom());
  for (const auto& e : mf.blocks.at(block)) {
    try {
      out[e.world] = d.parse(e.value.text);
    } catch (const ValueError& err) {
      fail_at(e.value, err.what());
    }
  }
  return out;
}

inline void expect_kind(const MeasureFile& mf, std::initializer_list<std::string_view> kinds) {
  for (auto k : kinds)
    if (mf.kind == k) return;
  fail_at(mf.kind_token, "domain '" + mf.kind + "' does not fit this use");
}

[[noreturn]] inline void rethrow_at(const MeasureFile& mf, const Error& e) { fail_at(mf.kind_token, e.what()); }

}  // namespace detail

inline ProbabilityMeasure load_probability(const MeasureFile& mf) {
  detail::expect_kind(mf, {"probability"});
  try {
    return {mf.space, detail::block_values(ProbabilityDomain{}, mf, 0)};
  } catch (const MalformedMeasure& e) {
    detail::rethrow_at(mf, e);
  }
}

inline RankingFunction load_ranking(const MeasureFile& mf) {
  detail::expect_kind(mf, {"ranking"});
  try {
    return {mf.space, detail::block_values(RankingDomain{}, mf, 0)};
  } catch (const MalformedMeasure& e) {
    detail::rethrow_at(mf, e);
  }
}

inline PossibilityMeasure load_possibility(const MeasureFile& mf) {
  detail::expect_kind(mf, {"possibility_min", "possibility_prod"});
  auto mode = mf.kind == "possibility_min" ? PossibilityConditioning::min : PossibilityConditioning::product;
  try {
    return {mf.space, detail::block_values(PossibilityDomain(mode), mf, 0), mode};
  } catch (const MalformedMeasure& e) {
    detail::rethrow_at(mf, e);
  }
}

inline ProbabilitySet load_probability_set(const MeasureFile& mf) {
  detail::expect_kind(mf, {"plp", "lower_probability"});
  std::vector<ProbabilityMeasure> members;
  try {
    for (std::size_t i = 0; i < mf.blocks.size(); ++i)
      members.emplace_back(mf.space, detail::block_values(ProbabilityDomain{}, mf, i));
    return {mf.space, std::move(members)};
  } catch (const MalformedMeasure& e) {
    detail::rethrow_at(mf, e);
  }
}

}  // namespace plausible::io
