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

#include "plausible/bayes/dag.hpp"
#include "plausible/bayes/network.hpp"
#include "plausible/errors.hpp"
#include "plausible/io/measure_file.hpp"
#include "plausible/io/tokens.hpp"

namespace plausible::io {

/// A parsed network file:
///
///     domain <kind> [<index count>]
///     node <name>
///     edge <from> <to>
///     cpt <node> <parent bits | -> <v0> <v1>
///
/// Nodes are numbered in declaration order and must be declared before an
/// edge or cpt line uses them. The parent bits list the values of the
/// node's parents in node order; `-` stands for the single row of a node
/// without parents. Every row must be given exactly once. A file with no
/// cpt lines describes a bare dag and may omit the domain line.
struct NetworkFile {
  struct Row {
    bayes::Node node = 0;
    std::size_t code = 0;
    Token at;
    Token v0;
    Token v1;
  };
  std::string kind;
  Token kind_token;
  std::optional<std::size_t> index_count;
  bayes::Dag dag;
  std::vector<Row> rows;
};

inline NetworkFile parse_network_file(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty network file", 1, 1);
  NetworkFile nf;
  std::vector<std::string> names;
  std::vector<std::pair<Token, Token>> edges;
  struct RawRow {
    Token node, bits, v0, v1;
  };
  std::vector<RawRow> raw;
  for (const auto& l : lines) {
    const auto& head = l.front();
    if (head.text == "domain") {
      if (!nf.kind.empty()) fail_at(head, "domain declared twice");
      expect_arity(l, 2, 3);
      auto k = canonical_kind(l[1].text);
      if (!k || *k == "lower_probability") fail_at(l[1], "unsupported network domain '" + l[1].text + "'");
      nf.kind = *k;
      nf.kind_token = l[1];
      if (l.size() == 3) {
        try {
          nf.index_count = std::stoul(l[2].text);
        } catch (const std::exception&) {
          fail_at(l[2], "not an index count: '" + l[2].text + "'");
        }
      }
    } else if (head.text == "node") {
      expect_arity(l, 2, 2);
      if (!edges.empty() || !raw.empty()) fail_at(head, "node lines must precede edge and cpt lines");
      for (const auto& n : names)
        if (n == l[1].text) fail_at(l[1], "node '" + n + "' declared twice");
      names.push_back(l[1].text);
    } else if (head.text == "edge") {
      expect_arity(l, 3, 3);
      edges.emplace_back(l[1], l[2]);
    } else if (head.text == "cpt") {
      expect_arity(l, 5, 5);
      raw.push_back({l[1], l[2], l[3], l[4]});
    } else {
      fail_at(head, "unexpected '" + head.text + "'");
    }
  }
  if (nf.kind.empty() && !raw.empty()) fail_at(raw.front().node, "cpt line without a 'domain' line");
  if (nf.kind == "plp" && !nf.index_count) fail_at(nf.kind_token, "plp needs an index count");
  if (names.empty()) throw ParseError("network without nodes", 1, 1);

  nf.dag = bayes::Dag(names);
  auto node_of = [&](const Token& t) {
    auto v = nf.dag.find(t.text);
    if (!v) fail_at(t, "unknown node '" + t.text + "'");
    return *v;
  };
  for (const auto& [a, b] : edges) {
    try {
      nf.dag.add_edge(node_of(a), node_of(b));
    } catch (const PreconditionError& e) {
      fail_at(a, e.what());
    }
  }
  for (const auto& r : raw) {
    bayes::Node v = node_of(r.node);
    const std::size_t k = nf.dag.parents(v).size();
    std::size_t code = 0;
    if (k == 0) {
      if (r.bits.text != "-") fail_at(r.bits, "node '" + r.node.text + "' has no parents; use '-'");
    } else {
      if (r.bits.text.size() != k) fail_at(r.bits, "expected " + std::to_string(k) + " parent bits");
      for (char c : r.bits.text) {
        if (c != '0' && c != '1') fail_at(r.bits, "parent bits must be 0 or 1");
        code = 2 * code + static_cast<std::size_t>(c - '0');
      }
    }
    for (const auto& prev : nf.rows)
      if (prev.node == v && prev.code == code) fail_at(r.bits, "row given twice");
    nf.rows.push_back({v, code, r.node, r.v0, r.v1});
  }
  return nf;
}

/// The quantitative network over `d`. Throws ParseError for missing rows
/// and for values that are not literals of `d`.
template <AlgebraicDomain D>
bayes::QuantitativeBN<D> load_network(const NetworkFile& nf, const D& d) {
  using V = value_of<D>;
  const auto& g = nf.dag;
  std::vector<bayes::Cpt<V>> tables(g.size());
  std::vector<std::vector<char>> seen(g.size());
  for (bayes::Node v = 0; v < g.size(); ++v) {
    const std::size_t rows = std::size_t{1} << g.parents(v).size();
    tables[v].rows.assign(rows, {d.bottom(), d.bottom()});
    seen[v].assign(rows, 0);
  }
  auto value = [&](const Token& t) {
    try {
      auto x = d.parse(t.text);
      if (!d.in_carrier(x)) fail_at(t, "value outside the domain");
      return x;
    } catch (const ValueError& e) {
      fail_at(t, e.what());
    }
  };
  for (const auto& r : nf.rows) {
    tables[r.node].rows[r.code] = {value(r.v0), value(r.v1)};
    seen[r.node][r.code] = 1;
  }
  for (bayes::Node v = 0; v < g.size(); ++v)
    for (std::size_t c = 0; c < seen[v].size(); ++c)
      if (!seen[v][c]) fail_at(nf.kind_token, "no cpt row " + std::to_string(c) + " for node '" + g.name(v) + "'");
  return {d, g, std::move(tables)};
}

/// Writes `bn` in the format read by parse_network_file. `kind` is the
/// domain line (for example "plp 2").
template <AlgebraicDomain D>
std::string write_network(const bayes::QuantitativeBN<D>& bn, const std::string& kind) {
  const auto& g = bn.dag();
  const auto& d = bn.domain();
  std::string out = "domain " + kind + "\n";
  for (const auto& n : g.names()) out += "node " + n + "\n";
  for (const auto& [a, b] : g.edges()) out += "edge " + g.name(a) + " " + g.name(b) + "\n";
  for (bayes::Node v = 0; v < g.size(); ++v) {
    const std::size_t k = g.parents(v).size();
    const auto& rows = bn.table(v).rows;
    for (std::size_t c = 0; c < rows.size(); ++c) {
      std::string bits = k == 0 ? "-" : std::string(k, '0');
      for (std::size_t i = 0; i < k; ++i)
        if ((c >> (k - 1 - i)) & 1U) bits[i] = '1';
      out += "cpt " + g.name(v) + " " + bits + " " + d.format(rows[c][0]) + " " + d.format(rows[c][1]) + "\n";
    }
  }
  return out;
}

}  // namespace plausible::io
