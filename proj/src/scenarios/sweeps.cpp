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

#include "qoc/scenarios/sweeps.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qoc/error.hpp"

namespace qoc::scenarios {

Scenario at_axis_value(const Scenario& base, SweepAxis axis, double value) {
  Scenario s = base;
  switch (axis) {
    case SweepAxis::Nc: s.harmonics = static_cast<int>(std::lround(value)); break;
    case SweepAxis::Time: s.gate_time = value; break;
    case SweepAxis::Coupling: s.model.g_mhz = value; break;
    case SweepAxis::None: throw Error(Errc::InvalidConfig, "no sweep axis given");
  }
  s.axis = SweepAxis::None;
  s.sweep_values.clear();
  return s;
}

std::vector<SweepPoint> run_sweep(const Scenario& base, SweepAxis axis, const std::vector<double>& values,
                                  unsigned workers, const PointCallback& on_point) {
  Scenario checked = base;
  checked.axis = axis;
  checked.sweep_values = values;
  validate(checked);

  std::vector<SweepPoint> points(values.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(values.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::mutex report;
  auto work = [&]() {
#ifdef _OPENMP
    if (workers > 1) omp_set_num_threads(1);
#endif
    for (std::size_t i = next++; i < values.size(); i = next++) {
      SweepPoint& p = points[i];
      p.value = values[i];
      try {
        p.result = run_scenario(at_axis_value(base, axis, values[i]));
      } catch (const std::exception& e) {
        p.error = e.what();
      }
      if (on_point) {
        const std::lock_guard<std::mutex> lock(report);
        on_point(i, p);
      }
    }
  };

  if (workers == 1) {
    work();
    return points;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  return points;
}

std::vector<SweepPoint> run_nc_sweep(const Scenario& base, const std::vector<int>& nc_values, unsigned workers) {
  return run_sweep(base, SweepAxis::Nc, std::vector<double>(nc_values.begin(), nc_values.end()), workers);
}

std::vector<SweepPoint> run_time_sweep(const Scenario& base, const std::vector<double>& gate_times,
                                       unsigned workers) {
  return run_sweep(base, SweepAxis::Time, gate_times, workers);
}

std::optional<double> first_above(const std::vector<SweepPoint>& points, double fidelity) {
  std::optional<double> best;
  for (const SweepPoint& p : points) {
    if (p.ok() && 1.0 - p.best_infidelity() > fidelity && (!best || p.value < *best)) best = p.value;
  }
  return best;
}

}  // namespace qoc::scenarios
