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

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "plausible/axioms.hpp"
#include "plausible/bayes/construct.hpp"
#include "plausible/bayes/counterexample.hpp"
#include "plausible/bayes/dsep.hpp"
#include "plausible/bayes/network.hpp"
#include "plausible/bayes/reconstruct.hpp"
#include "plausible/cli/document.hpp"
#include "plausible/conditioning.hpp"
#include "plausible/demos.hpp"
#include "plausible/independence.hpp"
#include "plausible/io/measure_file.hpp"
#include "plausible/io/network_file.hpp"
#include "plausible/io/query.hpp"
#include "plausible/semigraphoid.hpp"

namespace plausible::cli {

/// Parsed command line. `domain` holds the canonical kind.
struct Command {
  std::string subcommand;
  std::string domain;
  std::string input;
  std::string net;
  std::string query;
  std::string relation = "indep";
  std::string ordering;
  std::string output;
  std::string lower = "all";
  std::size_t indices = 2;
  std::uint64_t seed = AuditOptions{}.seed;
  bool structured = false;
};

namespace detail {

inline void require_domain(const Command& c) {
  if (c.domain.empty()) throw InputError("--domain is required for " + c.subcommand);
}

inline void match_domain(const Command& c, const std::string& file_kind) {
  if (!c.domain.empty() && !file_kind.empty() && c.domain != file_kind)
    throw InputError("domain mismatch: --domain " + c.domain + " but the file declares " + file_kind);
}

inline LowerStrictness strictness(const Command& c) {
  if (c.lower == "all") return LowerStrictness::all_positive;
  if (c.lower == "some") return LowerStrictness::some_positive;
  throw InputError("--lower must be 'all' or 'some'");
}

/// Calls f(cps, set) with the cps the measure file describes; `set` is the
/// probability set behind plp and lower probability, null otherwise.
template <typename F>
void visit_measure(const io::MeasureFile& mf, const Command& c, F&& f) {
  if (mf.kind == "probability") {
    f(extend_probability(io::load_probability(mf)), static_cast<const ProbabilitySet*>(nullptr));
  } else if (mf.kind == "ranking") {
    f(extend_ranking(io::load_ranking(mf)), static_cast<const ProbabilitySet*>(nullptr));
  } else if (mf.kind == "possibility_min" || mf.kind == "possibility_prod") {
    f(extend_possibility(io::load_possibility(mf)), static_cast<const ProbabilitySet*>(nullptr));
  } else {
    auto ps = io::load_probability_set(mf);
    if (mf.kind == "plp")
      f(extend_plp(ps), &ps);
    else
      f(extend_lower_probability(ps, strictness(c)), &ps);
  }
}

/// Calls f(domain) for an algebraic kind.
template <typename F>
void visit_domain(const std::string& kind, std::size_t indices, F&& f) {
  if (kind == "probability")
    f(ProbabilityDomain{});
  else if (kind == "ranking")
    f(RankingDomain{});
  else if (kind == "possibility_min")
    f(PossibilityDomain(PossibilityConditioning::min));
  else if (kind == "possibility_prod")
    f(PossibilityDomain(PossibilityConditioning::product));
  else if (kind == "plp")
    f(PlpDomain(indices));
  else
    throw InputError("domain '" + kind + "' is not algebraic");
}

inline std::string kind_line(const std::string& kind, std::size_t indices) {
  return kind == "plp" ? kind + " " + std::to_string(indices) : kind;
}

inline io::MeasureFile load_measure(Document& doc, const Command& c) {
  require_domain(c);
  auto mf = io::parse_measure_file(doc.input(c.input));
  match_domain(c, mf.kind);
  return mf;
}

inline io::NetworkFile load_net(Document& doc, const Command& c) {
  auto nf = io::parse_network_file(doc.input(c.net));
  match_domain(c, nf.kind);
  return nf;
}

/// Queries name variable sets unless some part is written as an event
/// (an assignment, a world list, W or *).
inline bool event_form(const io::QueryParts& q) {
  for (const auto* p : {&q.left, &q.right, &q.given})
    if (p->text.find_first_of("={") != std::string::npos || p->text == "W" || p->text == "*") return true;
  return false;
}

inline bayes::NodeSet node_list(const bayes::Dag& g, const io::QueryParts::Part& p) {
  return io::parse_name_list(p, [&](const std::string& n) { return g.find(n); });
}

}  // namespace detail

// ---- subcommands --------------------------------------------------------

inline void run_audit(Document& doc, const Command& c) {
  auto mf = detail::load_measure(doc, c);
  AuditOptions opt;
  opt.seed = c.seed;
  doc.seed(c.seed);
  detail::visit_measure(mf, c, [&](const auto& cps, const ProbabilitySet*) {
    using D = std::remove_cvref_t<decltype(cps.domain())>;
    const auto* space = &cps.space();
    doc.line("audit " + mf.kind + " over " + std::to_string(cps.world_count()) + " worlds");
    auto reports = check_cps_axioms(cps, opt);
    reports.push_back(check_cpl5(cps, opt));
    if constexpr (AlgebraicDomain<D>) {
      // Acc4 is part of both suites; report it once.
      for (auto& r : check_algebraic(cps, opt))
        if (r.axiom != "Acc4") reports.push_back(std::move(r));
      const std::size_t n = cps.space().variable_count();
      if (n >= 1 && n <= 8) {
        auto mode = n <= 3 ? SemigraphoidMode::exhaustive : SemigraphoidMode::sampled;
        for (auto& r : check_semigraphoid(cps, mode, opt)) reports.push_back(std::move(r));
      }
    }
    doc.reports(reports, space);
    if (!all_hold(reports)) doc.fail();
    doc.line(all_hold(reports) ? "all axioms hold" : "some axioms are violated");
  });
}

inline void run_indep(Document& doc, const Command& c) {
  auto mf = detail::load_measure(doc, c);
  auto q = io::split_query(c.query);
  detail::visit_measure(mf, c, [&](const auto& cps, const ProbabilitySet* ps) {
    using D = std::remove_cvref_t<decltype(cps.domain())>;
    auto ni = [&](const Event& u, const Event& v, const Event& vp) -> NiAnswer {
      if constexpr (AlgebraicDomain<D>)
        return noninteract_events(cps, u, v, vp);
      else
        throw InputError("ni needs an algebraic domain");
    };
    const auto& s = cps.space();
    bool rv = s.has_variables() && !detail::event_form(q);
    auto& a = doc.answer();
    a["relation"] = c.relation;
    a["query"] = c.query;
    a["form"] = rv ? "variables" : "events";
    bool holds = true;
    std::string diagnostic;
    if (rv) {
      auto find = [&](const std::string& n) { return s.find_variable(n); };
      auto x = io::parse_name_list(q.left, find), y = io::parse_name_list(q.right, find),
           z = io::parse_name_list(q.given, find);
      plausible::detail::check_disjoint(x, y, z, s.variable_count());
      if (c.relation == "indep") {
        holds = indep_rv(cps, x, y, z);
      } else if (c.relation == "type1") {
        if (!ps) throw InputError("type1 needs a plp or lower_probability measure");
        holds = type1_indep(*ps, x, y, z);
      } else {
        for (std::size_t i = 0; holds && i < (std::size_t{1} << x.size()); ++i)
          for (std::size_t j = 0; holds && j < (std::size_t{1} << y.size()); ++j)
            for (std::size_t k = 0; holds && k < (std::size_t{1} << z.size()); ++k) {
              Event u = s.assignment_code(x, i), v = s.assignment_code(y, j), vp = s.assignment_code(z, k);
              auto r = ni(u, v, vp);
              if (!r.holds) {
                holds = false;
                diagnostic = r.diagnostic;
                a["witness"] = {{"U", s.names_of(u)}, {"V", s.names_of(v)}, {"V'", s.names_of(vp)}};
              }
            }
      }
    } else {
      if (c.relation == "type1") throw InputError("type1 takes variable sets");
      Event u = io::parse_event(q.left, s), v = io::parse_event(q.right, s);
      Event vp = q.given.text.empty() ? s.all() : io::parse_event(q.given, s);
      a["events"] = {{"U", s.names_of(u)}, {"V", s.names_of(v)}, {"V'", s.names_of(vp)}};
      if (c.relation == "indep") {
        holds = indep_events(cps, u, v, vp);
      } else {
        auto r = ni(u, v, vp);
        holds = r.holds;
        diagnostic = r.diagnostic;
      }
    }
    a["holds"] = holds;
    if (!diagnostic.empty()) a["diagnostic"] = diagnostic;
    doc.line(c.relation + " " + c.query + ": " + (holds ? "yes" : "no"));
    if (!diagnostic.empty()) doc.line("  " + diagnostic);
  });
}

inline void run_dsep(Document& doc, const Command& c) {
  auto nf = detail::load_net(doc, c);
  const auto& g = nf.dag;
  auto q = io::split_query(c.query);
  auto x = detail::node_list(g, q.left), y = detail::node_list(g, q.right), z = detail::node_list(g, q.given);
  bool reach = bayes::d_separated_by_reachability(g, x, y, z);
  bool trails = bayes::d_separated_by_trails(g, x, y, z);
  auto& a = doc.answer();
  a["query"] = c.query;
  a["separated"] = reach;
  a["trail_enumeration_agrees"] = reach == trails;
  doc.line(c.query + ": " + (reach ? "separated" : "connected"));
  auto first_trail = [&]() -> std::optional<std::vector<bayes::Node>> {
    for (bayes::Node u : x)
      for (bayes::Node v : y)
        if (auto t = bayes::find_active_trail(g, u, v, z)) return t;
    return std::nullopt;
  };
  if (auto t = reach ? std::nullopt : first_trail()) {
    std::vector<std::string> names;
    std::string line;
    for (bayes::Node n : *t) {
      names.push_back(g.name(n));
      line += (line.empty() ? "" : " - ") + g.name(n);
    }
    a["active_trail"] = names;
    doc.line("  active trail: " + line);
  }
  if (reach != trails) {
    doc.line("  trail enumeration disagrees");
    doc.fail();
  }
}

inline void run_build(Document& doc, const Command& c) {
  auto mf = detail::load_measure(doc, c);
  detail::visit_measure(mf, c, [&](const auto& cps, const ProbabilitySet*) {
    using D = std::remove_cvref_t<decltype(cps.domain())>;
    if constexpr (!AlgebraicDomain<D>) {
      throw InputError("build needs an algebraic domain");
    } else {
      const auto& s = cps.space();
      if (!s.has_variables()) throw InputError("build needs a 'variables' measure");
      bayes::NodeSet ordering;
      if (c.ordering.empty()) {
        for (bayes::Node v = 0; v < s.variable_count(); ++v) ordering.push_back(v);
      } else {
        ordering = io::parse_name_list({c.ordering, 1}, [&](const std::string& n) { return s.find_variable(n); });
        if (ordering.size() != s.variable_count()) throw InputError("--ordering must list every variable once");
      }
      auto dag = bayes::construct_bn(cps, ordering);
      auto bn = bayes::extract_cpts(cps, dag);
      auto rep = bayes::check_representable(bn);
      auto text = io::write_network(bn, detail::kind_line(mf.kind, bn.domain().name() == "plp" ? mf.blocks.size() : 0));
      auto& a = doc.answer();
      nlohmann::json edges = nlohmann::json::array();
      for (const auto& [u, v] : dag.edges()) edges.push_back({dag.name(u), dag.name(v)});
      a["edges"] = edges;
      a["network"] = text;
      doc.report(rep);
      if (!rep.holds()) doc.fail();
      if (!c.output.empty()) {
        std::ofstream(c.output, std::ios::binary) << text;
        doc.line("network written to " + c.output);
      } else {
        doc.line(text);
      }
    }
  });
}

inline void run_reconstruct(Document& doc, const Command& c) {
  detail::require_domain(c);
  auto nf = detail::load_net(doc, c);
  if (nf.kind.empty()) throw InputError("the network file has no cpts");
  detail::visit_domain(c.domain, nf.index_count.value_or(c.indices), [&](const auto& d) {
    auto bn = io::load_network(nf, d);
    auto rep = bayes::check_representable(bn);
    doc.report(rep);
    if (!rep.holds()) {
      doc.fail();
      return;
    }
    auto cps = bayes::reconstruct(bn);
    auto joint = bayes::joint_values(bn);
    const auto& s = cps.space();
    nlohmann::json rows = nlohmann::json::array();
    doc.line("joint:");
    for (std::size_t w = 0; w < joint.size(); ++w) {
      rows.push_back({{"world", s.world_name(w)}, {"value", d.format(joint[w])}});
      doc.line("  (" + s.world_name(w) + ") " + d.format(joint[w]));
    }
    auto compat = bayes::compatible(cps, bn.dag());
    auto& a = doc.answer();
    a["joint"] = rows;
    a["compatible"] = compat.holds;
    if (!compat) a["incompatible_node"] = bn.dag().name(*compat.failing_node);
    doc.line(std::string("compatible with the dag: ") + (compat ? "yes" : "no, at " + bn.dag().name(*compat.failing_node)));
  });
}

inline void run_counterexample(Document& doc, const Command& c) {
  detail::require_domain(c);
  auto nf = detail::load_net(doc, c);
  const auto& g = nf.dag;
  auto q = io::split_query(c.query);
  auto x = detail::node_list(g, q.left), y = detail::node_list(g, q.right), z = detail::node_list(g, q.given);
  if (x.size() != 1 || y.size() != 1) throw InputError("counterexample takes one node on each side");
  detail::visit_domain(c.domain, c.indices, [&](const auto& d) {
    auto& a = doc.answer();
    a["query"] = c.query;
    auto bn = bayes::dsep_counterexample(g, d, x[0], y[0], z);
    if (!bn) {
      a["separated"] = true;
      doc.line(c.query + ": separated, no counterexample exists");
      doc.fail();
      return;
    }
    a["separated"] = false;
    auto rep = bayes::verify_counterexample(*bn, g, x[0], y[0], z);
    auto text = io::write_network(*bn, detail::kind_line(c.domain, c.indices));
    a["network"] = text;
    doc.report(rep);
    if (!rep.holds()) doc.fail();
    if (!c.output.empty()) {
      std::ofstream(c.output, std::ios::binary) << text;
      doc.line("network written to " + c.output);
    } else {
      doc.line(text);
    }
  });
}

inline void run_demos(Document& doc, const Command& c) {
  std::vector<std::string> names = c.input.empty() || c.input == "all" ? demos::demo_names() : std::vector{c.input};
  auto& a = doc.answer();
  a = nlohmann::json::array();
  for (const auto& name : names) {
    demos::DemoResult r;
    try {
      r = demos::run_demo(name);
    } catch (const PreconditionError& e) {
      throw InputError(e.what());
    }
    nlohmann::json checks = nlohmann::json::array();
    doc.line(name + ": " + (r.passed() ? "PASS" : "FAIL"));
    for (const auto& ch : r.checks) {
      checks.push_back({{"label", ch.label}, {"expected", ch.expected}, {"actual", ch.actual}, {"ok", ch.ok()}});
      doc.line("  " + ch.label + ": " + ch.actual + (ch.ok() ? "" : " (expected " + ch.expected + ")"));
    }
    a.push_back({{"demo", name}, {"passed", r.passed()}, {"checks", checks}});
    if (!r.passed()) doc.fail();
  }
}

// ---- entry point --------------------------------------------------------

/// Runs one command line. Writes the report to `out` and diagnostics to
/// `err`; returns 0 on success, 1 when a check fails and 2 on bad input.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Command c;
  CLI::App app{"Conditional plausibility measures and plausibilistic Bayesian networks", "plausible"};
  app.require_subcommand(1, 1);
  std::string format = "text";
  std::string domain;
  app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--seed", c.seed, "seed for sampled checks")->envname("PLAUSIBLE_SEED");
  app.fallthrough();

  auto with_domain = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--domain", domain, "domain kind");
    if (required) o->required();
  };
  auto* audit = app.add_subcommand("audit", "run the axiom suite on a measure file");
  with_domain(audit, true);
  audit->add_option("measure", c.input, "measure file")->required();
  audit->add_option("--lower", c.lower, "lower probability conditioning: all or some");

  auto* indep = app.add_subcommand("indep", "answer an independence query");
  with_domain(indep, true);
  indep->add_option("measure", c.input, "measure file")->required();
  indep->add_option("query", c.query, "'A ; B | C'")->required();
  indep->add_option("--relation", c.relation, "indep, ni or type1")->check(CLI::IsMember({"indep", "ni", "type1"}));
  indep->add_option("--lower", c.lower, "lower probability conditioning: all or some");

  auto* dsep = app.add_subcommand("dsep", "answer a d-separation query");
  with_domain(dsep, false);
  dsep->add_option("--net", c.net, "network or dag file")->required();
  dsep->add_option("query", c.query, "'A ; B | C'")->required();

  auto* build = app.add_subcommand("build", "construct a network from a measure");
  with_domain(build, true);
  build->add_option("measure", c.input, "measure file")->required();
  build->add_option("--ordering", c.ordering, "comma separated variable order");
  build->add_option("--output", c.output, "write the network file here");

  auto* recon = app.add_subcommand("reconstruct", "reconstruct the joint from a network file");
  with_domain(recon, true);
  recon->add_option("--net", c.net, "network file")->required();

  auto* cex = app.add_subcommand("counterexample", "network violating an independence that d-separation does not give");
  with_domain(cex, true);
  cex->add_option("--net", c.net, "network or dag file")->required();
  cex->add_option("query", c.query, "'A ; B | C'")->required();
  cex->add_option("--indices", c.indices, "index count for plp");
  cex->add_option("--output", c.output, "write the network file here");

  auto* demo = app.add_subcommand("demo", "replay the documented examples");
  demo->add_option("name", c.input, "demo name or all");

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "plausible: " << e.what() << "\n";
    return exit_input_error;
  }
  c.structured = format == "structured";
  c.subcommand = app.get_subcommands().front()->get_name();
  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  Document doc(c.subcommand, args);
  try {
    if (!domain.empty()) {
      auto k = io::canonical_kind(domain);
      if (!k) throw InputError("unknown domain '" + domain + "'");
      c.domain = *k;
    }
    if (c.subcommand == "audit") run_audit(doc, c);
    else if (c.subcommand == "indep") run_indep(doc, c);
    else if (c.subcommand == "dsep") run_dsep(doc, c);
    else if (c.subcommand == "build") run_build(doc, c);
    else if (c.subcommand == "reconstruct") run_reconstruct(doc, c);
    else if (c.subcommand == "counterexample") run_counterexample(doc, c);
    else run_demos(doc, c);
  } catch (const ParseError& e) {
    doc.input_error(e.what());
  } catch (const InputError& e) {
    doc.input_error(e.what());
  } catch (const PreconditionError& e) {
    doc.input_error(e.what());
  } catch (const ValueError& e) {
    doc.input_error(e.what());
  } catch (const ConfigurationError& e) {
    doc.input_error(e.what());
  }
  if (doc.exit_code() == exit_input_error) err << "plausible: " << doc.error() << "\n";
  out << doc.render(c.structured);
  return doc.exit_code();
}

}  // namespace plausible::cli
