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
#include <utility>
#include <vector>

#include "plausible/errors.hpp"
#include "plausible/event.hpp"

namespace plausible {

enum class Verdict { holds, violated, inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::violated:
      return "violated";
    default:
      return "inconclusive";
  }
}

/// The concrete instance behind a failed (or, for richness, a found)
/// check: named events, named formatted values and a short note.
struct Witness {
  std::vector<std::pair<std::string, Event>> events;
  std::vector<std::pair<std::string, std::string>> values;
  std::string note;

  Witness& event(std::string role, Event e) {
    events.emplace_back(std::move(role), std::move(e));
    return *this;
  }
  Witness& value(std::string role, std::string v) {
    values.emplace_back(std::move(role), std::move(v));
    return *this;
  }
  Witness& annotate(std::string text) {
    note = std::move(text);
    return *this;
  }

  const Event& event(std::string_view role) const {
    for (const auto& [name, e] : events)
      if (name == role) return e;
    throw PreconditionError("witness has no event '" + std::string(role) + "'");
  }
  const std::string& value(std::string_view role) const {
    for (const auto& [name, v] : values)
      if (name == role) return v;
    throw PreconditionError("witness has no value '" + std::string(role) + "'");
  }
  bool has_event(std::string_view role) const {
    for (const auto& [name, e] : events)
      if (name == role) return true;
    return false;
  }
};

/// Outcome of one axiom family. `witness` is set exactly when the verdict
/// is `violated`, except for witness searches (richness), which attach the
/// witness they found to a `holds` verdict.
struct AxiomReport {
  std::string axiom;
  Verdict verdict = Verdict::holds;
  std::size_t instances = 0;
  std::optional<Witness> witness;

  bool holds() const noexcept { return verdict == Verdict::holds; }
  bool violated() const noexcept { return verdict == Verdict::violated; }

  static AxiomReport pass(std::string axiom, std::size_t instances) {
    return {std::move(axiom), Verdict::holds, instances, std::nullopt};
  }
  static AxiomReport fail(std::string axiom, std::size_t instances, Witness w) {
    return {std::move(axiom), Verdict::violated, instances, std::move(w)};
  }
};

inline const AxiomReport& find_report(const std::vector<AxiomReport>& reports, std::string_view axiom) {
  for (const auto& r : reports)
    if (r.axiom == axiom) return r;
  throw PreconditionError("no report for '" + std::string(axiom) + "'");
}

inline bool all_hold(const std::vector<AxiomReport>& reports) {
  for (const auto& r : reports)
    if (r.violated()) return false;
  return true;
}

}  // namespace plausible
