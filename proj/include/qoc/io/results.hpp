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
#include <string>
#include <vector>

#include "json.hpp"
#include "qoc/scenarios/sweeps.hpp"

// Result artifacts. A run directory holds pulse.json, trace.csv,
// spectrum.csv, populations.csv and meta.json; a sweep directory holds one run
// directory per point plus summary.csv.
namespace qoc::io {

namespace fs = std::filesystem;
using nlohmann::json;

// A sibling staging directory that becomes `target` on commit(). Refuses an
// existing target unless force is set. Uncommitted staging is removed on
// destruction.
class StagedDirectory {
 public:
  StagedDirectory(fs::path target, bool force);
  ~StagedDirectory();
  StagedDirectory(const StagedDirectory&) = delete;
  StagedDirectory& operator=(const StagedDirectory&) = delete;

  const fs::path& path() const { return staging_; }
  const fs::path& target() const { return target_; }
  void commit();

 private:
  fs::path target_;
  fs::path staging_;
  bool force_;
  bool committed_ = false;
};

// Throws Io when target exists and force is not set.
void ensure_writable(const fs::path& target, bool force);

// {a0, A[], phi[], f0, T} of the first drive; with several drives an extra
// "drives" array carries every drive in the same form.
json pulse_json(const std::vector<pulse::FourierPulse>& reports);
std::vector<pulse::FourierPulse> read_pulse_json(const fs::path& file);

json meta_json(const scenarios::ScenarioResult& r, double wall_seconds);

// Writes every run artifact into dir, which must exist.
void write_run_files(const fs::path& dir, const scenarios::ScenarioResult& r, double wall_seconds);

// axis value, best infidelity, iterations, error
void write_summary(const fs::path& file, const std::vector<scenarios::SweepPoint>& points);

// Subdirectory name of a sweep point, e.g. "nc_5" or "time_35.4".
std::string point_directory(scenarios::SweepAxis axis, double value);

}  // namespace qoc::io
