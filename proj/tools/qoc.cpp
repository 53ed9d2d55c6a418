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

// qoc: run, sweep and validate pulse-optimization scenarios.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qoc/error.hpp"
#include "qoc/io/config.hpp"
#include "qoc/io/results.hpp"
#include "qoc/scenarios/sweeps.hpp"

namespace {

using namespace qoc;
namespace fs = std::filesystem;

constexpr int kConverged = 0;
constexpr int kFailed = 1;
constexpr int kCapped = 2;

struct Flags {
  std::string config;
  std::string out = "results";
  std::optional<std::uint64_t> seed;
  bool force = false;
  unsigned workers = 0;
  std::string axis;
  bool json = false;
};

io::RunConfig load(const Flags& f) {
  io::RunConfig cfg = io::load_config(f.config);
  if (f.seed) cfg.scenario.seed = *f.seed;
  return cfg;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_catalog(const Flags& f) {
  for (const scenarios::Scenario& s : scenarios::catalog()) {
    if (f.json) {
      std::cout << io::to_json(s).dump() << '\n';
    } else {
      std::printf("%-18s %s\n", s.name.c_str(), s.description.c_str());
    }
  }
  return kConverged;
}

int cmd_validate(const Flags& f) {
  const io::RunConfig cfg = load(f);
  const scenarios::Scenario& s = cfg.scenario;
  std::printf("ok: %s method=%s T=%g ns N=%d Nc=%d drives=%zu\n", cfg.name.c_str(),
              std::string(scenarios::method_name(s.method)).c_str(), s.gate_time, s.slice_count(), s.harmonics,
              s.drives.size());
  return kConverged;
}

int cmd_run(const Flags& f) {
  const auto t0 = std::chrono::steady_clock::now();
  io::RunConfig cfg = load(f);
  cfg.scenario.axis = scenarios::SweepAxis::None;
  cfg.scenario.sweep_values.clear();
  io::StagedDirectory dir(fs::path(f.out) / cfg.name, f.force);
  const scenarios::ScenarioResult r = scenarios::run_scenario(cfg.scenario);
  io::write_run_files(dir.path(), r, seconds_since(t0));
  dir.commit();
  std::printf("%s: %s infidelity=%.6e iterations=%d stop=%s -> %s\n", cfg.name.c_str(), r.result.method.c_str(),
              r.result.best_infidelity, r.result.iterations,
              std::string(optimize::stop_reason_name(r.result.reason)).c_str(), dir.target().c_str());
  return r.result.converged() ? kConverged : kCapped;
}

std::vector<double> default_values(scenarios::SweepAxis axis) {
  switch (axis) {
    case scenarios::SweepAxis::Nc: return {1, 2, 3, 4, 5, 6, 7, 8};
    case scenarios::SweepAxis::Time: return {25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36};
    case scenarios::SweepAxis::Coupling: return {1.0, 25.4, 100.0};
    case scenarios::SweepAxis::None: break;
  }
  return {};
}

int cmd_sweep(const Flags& f) {
  const auto t0 = std::chrono::steady_clock::now();
  const scenarios::SweepAxis axis = scenarios::parse_axis(f.axis);
  if (axis == scenarios::SweepAxis::None) throw Error(Errc::InvalidConfig, "--axis must be nc, time or coupling");
  io::RunConfig cfg = load(f);
  std::vector<double> values = cfg.scenario.axis == axis ? cfg.scenario.sweep_values : default_values(axis);
  scenarios::Scenario checked = cfg.scenario;
  checked.axis = axis;
  checked.sweep_values = values;
  scenarios::validate(checked);

  io::StagedDirectory dir(fs::path(f.out) / cfg.name, f.force);
  const auto points = scenarios::run_sweep(
      cfg.scenario, axis, values, f.workers, [&](std::size_t, const scenarios::SweepPoint& p) {
        const fs::path sub = dir.path() / io::point_directory(axis, p.value);
        if (p.ok()) {
          fs::create_directory(sub);
          io::write_run_files(sub, *p.result, seconds_since(t0));
          std::printf("%s=%g infidelity=%.6e iterations=%d\n", std::string(scenarios::axis_name(axis)).c_str(),
                      p.value, p.best_infidelity(), p.result->result.iterations);
        } else {
          std::printf("%s=%g failed: %s\n", std::string(scenarios::axis_name(axis)).c_str(), p.value,
                      p.error.c_str());
        }
        std::fflush(stdout);
      });
  io::write_summary(dir.path() / "summary.csv", points);
  dir.commit();

  bool any_ok = false;
  bool all_converged = true;
  for (const scenarios::SweepPoint& p : points) {
    any_ok = any_ok || p.ok();
    all_converged = all_converged && p.ok() && p.result->result.converged();
  }
  std::printf("summary: %s\n", (dir.target() / "summary.csv").c_str());
  if (!any_ok) {
    std::fprintf(stderr, "qoc: error: every sweep point failed\n");
    return kFailed;
  }
  return all_converged ? kConverged : kCapped;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gradient-based pulse optimization with amplitude and bandwidth constraints"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&f](CLI::App* sub) {
    sub->add_option("config", f.config, "run configuration (JSON)")->required();
    sub->add_option("--out", f.out, "output root directory")->capture_default_str();
    sub->add_option("--seed", f.seed, "override the scenario seed");
    sub->add_flag("--force", f.force, "overwrite an existing output directory");
    sub->add_option("--workers", f.workers, "sweep worker threads (0 = hardware threads)");
  };

  CLI::App* run = app.add_subcommand("run", "optimize one scenario");
  add_common(run);
  CLI::App* sweep = app.add_subcommand("sweep", "optimize a scenario over a parameter axis");
  add_common(sweep);
  sweep->add_option("--axis", f.axis, "nc, time or coupling")->required()->check(CLI::IsMember({"nc", "time", "coupling"}));
  CLI::App* validate = app.add_subcommand("validate", "check a configuration without running it");
  validate->add_option("config", f.config, "run configuration (JSON)")->required();
  validate->add_option("--seed", f.seed, "override the scenario seed");
  CLI::App* catalog = app.add_subcommand("catalog", "list built-in scenarios");
  catalog->add_flag("--json", f.json, "print full scenario definitions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::fprintf(stderr, "qoc: error: %s\n", msg.c_str());
    return kFailed;
  }

  try {
    if (*run) return cmd_run(f);
    if (*sweep) return cmd_sweep(f);
    if (*validate) return cmd_validate(f);
    if (*catalog) return cmd_catalog(f);
  } catch (const std::exception& e) {
    std::string msg = e.what();
    for (char& c : msg) {
      if (c == '\n') c = ' ';
    }
    std::fprintf(stderr, "qoc: error: %s\n", msg.c_str());
    return kFailed;
  }
  return kFailed;
}
