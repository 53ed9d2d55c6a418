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

#include "qoc/pulse/pulse.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "qoc/constraint/spectral.hpp"
#include "qoc/error.hpp"

namespace qoc::pulse {

double eval_fourier(const FourierPulse& p, double t) {
  double value = p.a0;
  const double w = 2.0 * std::numbers::pi / p.gate_time;
  for (std::size_t n = 0; n < p.harmonics.size(); ++n) {
    const Harmonic& h = p.harmonics[n];
    value += h.amplitude * std::cos(w * static_cast<double>(n + 1) * t + h.phase);
  }
  return value;
}

PwcSequence sample(const FourierPulse& p, int n, double gate_time) {
  if (n < 2) throw Error(Errc::InvalidGrid, "need at least 2 slices, got " + std::to_string(n));
  if (!(gate_time > 0.0)) throw Error(Errc::InvalidGrid, "gate time must be positive");
  FourierPulse shifted = p;
  shifted.gate_time = gate_time;
  PwcSequence s;
  s.dt = gate_time / n;
  s.values.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) s.values[static_cast<std::size_t>(k)] = eval_fourier(shifted, k * s.dt);
  return s;
}

FourierPulse extract_fourier_report(const PwcSequence& s, int nc) {
  const int n = s.size();
  constraint::check_harmonics(n, nc);
  const std::vector<std::complex<double>> x = constraint::dft(s.values);
  FourierPulse p;
  p.gate_time = s.gate_time();
  p.a0 = x[0].real() / n;
  p.harmonics.resize(static_cast<std::size_t>(nc));
  for (int m = 1; m <= nc; ++m) {
    const auto& xm = x[static_cast<std::size_t>(m)];
    p.harmonics[static_cast<std::size_t>(m - 1)] = {2.0 * std::abs(xm) / n, std::arg(xm)};
  }
  return p;
}

std::vector<double> slice_times(int n, double dt) {
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) t[static_cast<std::size_t>(k)] = k * dt;
  return t;
}

}  // namespace qoc::pulse
