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

#include <openssl/evp.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "plausible/errors.hpp"
#include "plausible/report.hpp"
#include "plausible/worlds.hpp"

namespace plausible::cli {

inline constexpr std::string_view kSchema = "plausible-report/1";
inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_input_error = 2 };

/// Bad command-line input that is not a file syntax error: unreadable
/// files, domain mismatches, unsupported combinations.
class InputError : public Error {
 public:
  using Error::Error;
};

inline std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("SHA-256 failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline nlohmann::json witness_json(const Witness& w, const WorldSpace* space) {
  nlohmann::json events = nlohmann::json::array();
  for (const auto& [role, e] : w.events) {
    nlohmann::json worlds = nlohmann::json::array();
    if (space)
      for (const auto& n : space->names_of(e)) worlds.push_back(n);
    else
      for (auto i : e.worlds()) worlds.push_back(std::to_string(i));
    events.push_back({{"role", role}, {"worlds", worlds}});
  }
  nlohmann::json values = nlohmann::json::array();
  for (const auto& [role, v] : w.values) values.push_back({{"role", role}, {"value", v}});
  return {{"events", events}, {"values", values}, {"note", w.note}};
}

inline nlohmann::json report_json(const AxiomReport& r, const WorldSpace* space) {
  nlohmann::json j{{"axiom", r.axiom}, {"verdict", to_string(r.verdict)}, {"instances", r.instances}};
  j["witness"] = r.witness ? witness_json(*r.witness, space) : nlohmann::json(nullptr);
  return j;
}

/// What one invocation reports: a JSON document in structured mode and
/// the accumulated lines in text mode.
class Document {
 public:
  Document(std::string command, std::vector<std::string> arguments) {
    json_["schema"] = kSchema;
    json_["version"] = kVersion;
    json_["command"] = std::move(command);
    json_["arguments"] = std::move(arguments);
    json_["inputs"] = nlohmann::json::array();
    json_["reports"] = nlohmann::json::array();
    json_["status"] = "ok";
  }

  /// Reads a file and records its digest.
  std::string input(const std::string& path) {
    auto bytes = read_file(path);
    json_["inputs"].push_back({{"path", path}, {"sha256", sha256_hex(bytes)}});
    return bytes;
  }

  void seed(std::uint64_t s) { json_["seed"] = s; }

  void report(const AxiomReport& r, const WorldSpace* space = nullptr) {
    json_["reports"].push_back(report_json(r, space));
    std::string head = r.axiom;
    if (head.size() < 22) head.resize(22, ' ');
    line(head + " " + to_string(r.verdict) + " (" + std::to_string(r.instances) + " instances)");
    if (!r.witness) return;
    const auto& w = *r.witness;
    for (const auto& [role, e] : w.events) line("    " + role + " = " + (space ? space->format(e) : e.to_string()));
    for (const auto& [role, v] : w.values) line("    " + role + " = " + v);
    if (!w.note.empty()) line("    note: " + w.note);
  }

  void reports(const std::vector<AxiomReport>& rs, const WorldSpace* space = nullptr) {
    for (const auto& r : rs) report(r, space);
  }

  nlohmann::json& answer() { return json_["answer"]; }
  void line(std::string text) { text_.push_back(std::move(text)); }

  void fail() {
    if (code_ == exit_ok) {
      code_ = exit_failure;
      json_["status"] = "failure";
    }
  }
  void input_error(const std::string& message) {
    code_ = exit_input_error;
    json_["status"] = "input-error";
    json_["error"] = message;
  }
  int exit_code() const noexcept { return code_; }
  std::string error() const { return json_.value("error", std::string()); }

  std::string render(bool structured) const {
    if (structured) return json_.dump(2) + "\n";
    std::string out;
    for (const auto& l : text_) out += l + "\n";
    return out;
  }

 private:
  nlohmann::json json_;
  std::vector<std::string> text_;
  int code_ = exit_ok;
};

}  // namespace plausible::cli
