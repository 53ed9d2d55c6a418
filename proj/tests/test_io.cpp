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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "qoc/error.hpp"
#include "qoc/io/config.hpp"
#include "qoc/io/results.hpp"

using namespace qoc;
using namespace qoc::io;

namespace {

// Fresh directory under the system temp dir, removed on scope exit.
struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("qoc-io-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

bool has_issue(const ParseOutcome& o, Errc code, const std::string& key) {
  for (const auto& i : o.issues) {
    if (i.code == code && i.key == key) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("minimal config parses to the catalog scenario") {
    const auto o = parse_config_text(R"({"scenario": "single-x"})");
    REQUIRE(o.ok());
    CHECK(o.config->name == "single-x");
    CHECK(o.config->scenario.slice_count() == 148);
    CHECK(o.config->scenario.method == scenarios::Method::Cocoa);
  }

  TEST_CASE("overrides and sweep are applied") {
    const auto o = parse_config_text(R"({
      "scenario": "single-x", "method": "grape", "name": "g1",
      "overrides": {"harmonics": 3, "max_iterations": 7, "seed": 11, "bounds": [-10, 12], "gate_time": 40, "slices": 100},
      "sweep": {"axis": "time", "values": [30, 40]}
    })");
    REQUIRE_MESSAGE(o.ok(), o.summary());
    const auto& s = o.config->scenario;
    CHECK(o.config->name == "g1");
    CHECK(s.method == scenarios::Method::Grape);
    CHECK(s.harmonics == 3);
    CHECK(s.stop.max_iterations == 7);
    CHECK(s.seed == 11);
    CHECK(s.lower == -10);
    CHECK(s.upper == 12);
    CHECK(s.gate_time == 40);
    CHECK(s.slice_count() == 100);
    CHECK(s.axis == scenarios::SweepAxis::Time);
    CHECK(s.sweep_values == std::vector<double>{30, 40});
  }

  TEST_CASE("misspelled method names the key") {
    const auto o = parse_config_text(R"({"scenario": "single-x", "method": "cocao"})");
    CHECK_FALSE(o.ok());
    REQUIRE(has_issue(o, Errc::UnknownMethod, "method"));
    CHECK(o.summary().find("method") != std::string::npos);
    CHECK(o.summary().find("cocao") != std::string::npos);
  }

  TEST_CASE("harmonic count above the bound reports it") {
    const auto o = parse_config_text(R"({"scenario": "single-x", "overrides": {"harmonics": 80}})");
    CHECK_FALSE(o.ok());
    REQUIRE(has_issue(o, Errc::NcTooLarge, "harmonics"));
    CHECK(o.summary().find("73") != std::string::npos);
    CHECK(o.issues.size() == 1);
  }

  TEST_CASE("every problem is collected") {
    const auto o = parse_config_text(R"({
      "scenario": "single-x", "method": "cocao", "colour": 1,
      "overrides": {"seed": "x", "bounds": [1], "gate_time": true},
      "sweep": {"axis": "frequency"}
    })");
    CHECK(o.issues.size() >= 6);
    CHECK(has_issue(o, Errc::UnknownMethod, "method"));
    CHECK(has_issue(o, Errc::InvalidConfig, "colour"));
    CHECK(has_issue(o, Errc::TypeMismatch, "overrides.seed"));
    CHECK(has_issue(o, Errc::TypeMismatch, "overrides.gate_time"));
    CHECK(has_issue(o, Errc::InvalidConfig, "sweep.axis"));
    CHECK_FALSE(o.config.has_value());
  }

  TEST_CASE("structural errors") {
    CHECK(has_issue(parse_config_text("{}"), Errc::MissingField, "scenario"));
    CHECK(has_issue(parse_config_text(R"({"scenario": "nope"})"), Errc::UnknownScenario, "scenario"));
    CHECK(parse_config_text("[1, 2]").issues.front().code == Errc::TypeMismatch);
    CHECK(parse_config_text("{not json").issues.front().code == Errc::TypeMismatch);
    CHECK(parse_config("/nonexistent/qoc.json").issues.front().code == Errc::Io);
  }

  TEST_CASE("load_config throws the first issue's code") {
    TempDir dir;
    const fs::path f = dir.path / "c.json";
    std::ofstream(f) << R"({"scenario": "single-x", "method": "cocao"})";
    try {
      (void)load_config(f);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::UnknownMethod);
    }
  }

  TEST_CASE("inline scenario objects") {
    const auto o = parse_config_text(R"({"scenario": {"base": "single-x", "gate_time": 60, "harmonics": 4,
                                         "drives": [{"qubit": 0, "resonance": "00-10"}]}})");
    REQUIRE_MESSAGE(o.ok(), o.summary());
    CHECK(o.config->scenario.gate_time == 60);
    CHECK(o.config->scenario.harmonics == 4);
    CHECK(o.config->scenario.drives.at(0).qubit == 0);
    CHECK(has_issue(parse_config_text(R"({"scenario": {"gate_time": 60}})"), Errc::MissingField, "scenario.name"));
  }

  TEST_CASE("scenario JSON round trip") {
    for (const auto& s : scenarios::catalog()) {
      INFO(s.name);
      std::vector<ConfigIssue> issues;
      const scenarios::Scenario back = scenario_from_json(to_json(s), scenarios::Scenario{}, "scenario", issues);
      CHECK(issues.empty());
      CHECK(to_json(back) == to_json(s));
    }
  }

  TEST_CASE("pulse.json round trip") {
    TempDir dir;
    pulse::FourierPulse a;
    a.a0 = 4.9;
    a.gate_time = 50;
    a.harmonics = {{1.5, 0.25}, {0.125, -2.0}};
    pulse::FourierPulse b = a;
    b.a0 = -1;
    const json j = pulse_json({a});
    CHECK(j.at("f0").get<double>() == doctest::Approx(0.02));
    CHECK(j.at("A").size() == 2);
    CHECK_FALSE(j.contains("drives"));
    std::ofstream(dir.path / "pulse.json") << pulse_json({a, b}).dump();
    const auto back = read_pulse_json(dir.path / "pulse.json");
    REQUIRE(back.size() == 2);
    CHECK(back[0].a0 == a.a0);
    CHECK(back[1].a0 == b.a0);
    CHECK(back[0].harmonics[1].phase == -2.0);
    CHECK(back[0].gate_time == 50);
    CHECK_THROWS_AS(read_pulse_json(dir.path / "missing.json"), Error);
  }

  TEST_CASE("staged directory commits atomically") {
    TempDir dir;
    const fs::path target = dir.path / "run";
    {
      StagedDirectory stage(target, false);
      std::ofstream(stage.path() / "a.txt") << "1";
      CHECK_FALSE(fs::exists(target));
      stage.commit();
    }
    CHECK(slurp(target / "a.txt") == "1");
    CHECK_THROWS_AS(StagedDirectory(target, false), Error);
    {
      StagedDirectory stage(target, true);
      std::ofstream(stage.path() / "b.txt") << "2";
      CHECK(fs::exists(target / "a.txt"));
      stage.commit();
    }
    CHECK_FALSE(fs::exists(target / "a.txt"));
    CHECK(fs::exists(target / "b.txt"));
    {
      StagedDirectory abandoned(dir.path / "other", false);
      std::ofstream(abandoned.path() / "c.txt") << "3";
    }
    CHECK_FALSE(fs::exists(dir.path / "other"));
    int entries = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path)) ++entries;
    CHECK(entries == 1);
  }

  TEST_CASE("summary.csv lists every point") {
    TempDir dir;
    std::vector<scenarios::SweepPoint> pts(2);
    pts[0].value = 1;
    scenarios::ScenarioResult r;
    r.result.best_infidelity = 0.25;
    r.result.iterations = 9;
    pts[0].result = r;
    pts[1].value = 80;
    pts[1].error = "NcTooLarge: bad, really";
    write_summary(dir.path / "summary.csv", pts);
    CHECK(slurp(dir.path / "summary.csv") ==
          "value,best_infidelity,iterations,error\n1,0.25,9,\n80,,,NcTooLarge: bad  really\n");
    CHECK(point_directory(scenarios::SweepAxis::Nc, 5) == "nc_5");
    CHECK(point_directory(scenarios::SweepAxis::Time, 35.4) == "time_35.4");
  }

  TEST_CASE("run files are written") {
    TempDir dir;
    scenarios::Scenario s = scenarios::find_scenario("single-x");
    s.stop.max_iterations = 2;
    const auto r = scenarios::run_scenario(s);
    write_run_files(dir.path, r, 0.5);
    for (const char* f : {"pulse.json", "trace.csv", "spectrum.csv", "meta.json", "populations.csv", "waveform.csv"}) {
      CHECK(fs::exists(dir.path / f));
    }
    const json meta = json::parse(slurp(dir.path / "meta.json"));
    CHECK(meta.contains("seed"));
    const auto pulses = read_pulse_json(dir.path / "pulse.json");
    CHECK(pulses.at(0).harmonic_count() == 5);
  }
}
