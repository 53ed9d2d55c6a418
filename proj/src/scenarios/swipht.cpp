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

#include "qoc/scenarios/swipht.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qoc/error.hpp"
#include "qoc/units.hpp"

namespace qoc::scenarios {

double swipht_chi(double t, double a, double gate_time) {
  const double u = t / gate_time;
  return a * std::pow(u * (1.0 - u), 4) + std::numbers::pi / 4.0;
}

double swipht_chi_dot(double t, double a, double gate_time) {
  const double T = gate_time;
  return 4.0 * a / std::pow(T, 8) * std::pow(t * (T - t), 3) * (T - 2.0 * t);
}

double swipht_chi_ddot(double t, double a, double gate_time) {
  const double T = gate_time;
  const double s = T - 2.0 * t;
  const double p = t * (T - t);
  return 4.0 * a / std::pow(T, 8) * p * p * (3.0 * s * s - 2.0 * p);
}

double swipht_pulse(double t, double a, double gate_time, double delta) {
  const double chi_dot = swipht_chi_dot(t, a, gate_time);
  const double radicand = 0.25 * delta * delta - chi_dot * chi_dot;
  if (!(radicand > 0.0)) {
    throw Error(Errc::SpeedLimitViolated, "gate time " + std::to_string(gate_time) + " ns is below the speed limit " +
                                              std::to_string(speed_limit_T_min(a, delta)) + " ns");
  }
  const double r = std::sqrt(radicand);
  const double two_chi = 2.0 * swipht_chi(t, a, gate_time);
  return swipht_chi_ddot(t, a, gate_time) / (2.0 * r) - r * std::cos(two_chi) / std::sin(two_chi);
}

pulse::PwcSequence swipht_sequence(double a, double gate_time, double delta, int slices) {
  if (slices < 2 || !(gate_time > 0.0)) throw Error(Errc::InvalidGrid, "invalid SWIPHT grid");
  pulse::PwcSequence s;
  s.dt = gate_time / slices;
  s.values.resize(static_cast<std::size_t>(slices));
  for (int k = 0; k < slices; ++k) {
    s.values[static_cast<std::size_t>(k)] = swipht_pulse(k * s.dt, a, gate_time, delta) / units::kMHz;
  }
  return s;
}

double swipht_shape_max() {
  // d/du [u^3 (1-u)^3 (1-2u)] = 0 at the root of 3(1-2u)^2 = 2u(1-u) in (0, 1/2); bisect it.
  auto slope = [](double u) {
    const double s = 1.0 - 2.0 * u;
    return 3.0 * s * s - 2.0 * u * (1.0 - u);
  };
  double lo = 0.0;
  double hi = 0.5;
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    (slope(mid) > 0.0 ? lo : hi) = mid;
  }
  const double u = 0.5 * (lo + hi);
  return std::pow(u * (1.0 - u), 3) * (1.0 - 2.0 * u);
}

double speed_limit_T_min(double a, double delta) { return 8.0 * a * swipht_shape_max() / std::abs(delta); }

}  // namespace qoc::scenarios
