// Copyright 2026 The qoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qoc/error.hpp"
#include "qoc/scenarios/scenario.hpp"

// Declarative run configuration files.
//
//   {
//     "scenario": "single-x" | { "base": "single-x", ...scenario fields... },
//     "method": "cocoa" | "grape" | "crab",
//     "name": "output directory name",
//     "overrides": { "harmonics", "learning_rate", "max_iterations", "seed",
//                    "bounds", "gate_time", "slices", "crab_randomize" },
//     "sweep": { "axis": "nc" | "time" | "coupling", "values": [...] }
//   }
namespace qoc::io {

using nlohmann::json;

struct RunConfig {
  scenarios::Scenario scenario;
  std::string name;  // output directory name; defaults to the scenario name
};

struct ConfigIssue {
  Errc code = Errc::InvalidConfig;
  std::string key;
  std::string message;
};

struct ParseOutcome {
  std::optional<RunConfig> config;
  std::vector<ConfigIssue> issues;

  bool ok() const { return issues.empty(); }
  // All issues on one line.
  std::string summary() const;
};

ParseOutcome parse_config_json(const json& doc);
ParseOutcome parse_config_text(std::string_view text);
ParseOutcome parse_config(const std::filesystem::path& path);

// Throws the first issue's code with every issue in the message.
RunConfig load_config(const std::filesystem::path& path);

json to_json(const scenarios::Scenario& s);
// Reads a scenario object on top of `base`; problems are appended to issues
// with keys prefixed by `prefix`.
scenarios::Scenario scenario_from_json(const json& obj, scenarios::Scenario base, const std::string& prefix,
                                       std::vector<ConfigIssue>& issues);

}  // namespace qoc::io
