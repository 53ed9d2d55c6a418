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

#include <span>
#include <vector>

// Pulse amplitudes are in MHz (multiply by 2*pi*1e-3 for rad/ns), times in ns.
namespace qoc::pulse {

struct Harmonic {
  double amplitude = 0.0;
  double phase = 0.0;  // radians
};

// a0 + sum_n A_n cos(2 pi n t / T + phi_n)
struct FourierPulse {
  double a0 = 0.0;
  std::vector<Harmonic> harmonics;
  double gate_time = 1.0;

  double base_frequency() const { return 1.0 / gate_time; }  // GHz
  int harmonic_count() const { return static_cast<int>(harmonics.size()); }
};

struct PwcSequence {
  std::vector<double> values;
  double dt = 0.0;

  int size() const { return static_cast<int>(values.size()); }
  double gate_time() const { return dt * static_cast<double>(values.size()); }
};

double eval_fourier(const FourierPulse& p, double t);

// values[k] = eval_fourier(p, k * T / n). Throws InvalidGrid for n < 2 or T <= 0.
PwcSequence sample(const FourierPulse& p, int n, double gate_time);

// Amplitude/phase form of the band-limited content of s. Throws NcTooLarge
// when nc exceeds (N-1)/2.
FourierPulse extract_fourier_report(const PwcSequence& s, int nc);

// Slice start times k*dt.
std::vector<double> slice_times(int n, double dt);

}  // namespace qoc::pulse
