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

#include "qoc/constraint/amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qoc/ad/ops.hpp"
#include "qoc/error.hpp"

namespace qoc::constraint {

AmplitudeWindowConfig AmplitudeWindowConfig::for_gate(double lower, double upper, double gate_time) {
  AmplitudeWindowConfig cfg;
  cfg.lower = lower;
  cfg.upper = upper;
  cfg.gate_time = gate_time;
  cfg.edge_width = gate_time / 25.0;
  return cfg;
}

void AmplitudeWindowConfig::validate() const {
  if (!(lower < upper)) throw Error(Errc::InvalidConfig, "amplitude bounds need lower < upper");
  if (!(gate_time > 0.0)) throw Error(Errc::InvalidConfig, "gate time must be positive");
  if (!(edge_width > 0.0 && edge_width < gate_time / 2.0)) {
    throw Error(Errc::InvalidConfig, "edge width must lie in (0, T/2), got " + std::to_string(edge_width));
  }
  if (!(g_edge > 0.0)) throw Error(Errc::InvalidConfig, "edge slope must be positive");
  if (!(g_amp > 0.0)) throw Error(Errc::InvalidConfig, "amplitude slope must be positive");
}

double sigmoid_down(double x, double g) {
  const double z = g * x;
  if (z >= 0) {
    const double e = std::exp(-z);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(z));
}

double sigmoid_up(double x, double g) { return sigmoid_down(-x, g); }

double squash(double omega, const AmplitudeWindowConfig& cfg) {
  const double h = 0.5 * (cfg.upper - cfg.lower);
  const double c = 0.5 * (cfg.upper + cfg.lower);
  return (2.0 * sigmoid_up((omega - c) / h, cfg.g_amp) - 1.0) * h + c;
}

double unsquash(double value, const AmplitudeWindowConfig& cfg) {
  const double h = 0.5 * (cfg.upper - cfg.lower);
  const double c = 0.5 * (cfg.upper + cfg.lower);
  const double y = std::clamp((value - c) / h, -1.0 + 1e-9, 1.0 - 1e-9);
  // 2 sigma(g x) - 1 = tanh(g x / 2)
  return c + h * 2.0 * std::atanh(y) / cfg.g_amp;
}

double edge_window(double t, const AmplitudeWindowConfig& cfg) {
  const double T = cfg.gate_time;
  return sigmoid_up((t - cfg.edge_width) / T, cfg.g_edge) *
         sigmoid_down((t - (T - cfg.edge_width)) / T, cfg.g_edge);
}

double amplitude_window(double omega, double t, const AmplitudeWindowConfig& cfg) {
  return edge_window(t, cfg) * squash(omega, cfg);
}

std::vector<double> amplitude_window(std::span<const double> omega, std::span<const double> times,
                                     const AmplitudeWindowConfig& cfg) {
  if (omega.size() != times.size()) throw Error(Errc::LengthMismatch, "amplitude window: values and times differ");
  std::vector<double> out(omega.size());
  for (std::size_t k = 0; k < omega.size(); ++k) out[k] = amplitude_window(omega[k], times[k], cfg);
  return out;
}

ad::Var amplitude_window(ad::Var omega, std::span<const double> times, const AmplitudeWindowConfig& cfg) {
  const auto n = static_cast<Eigen::Index>(times.size());
  if (omega.value().rows() != n || omega.value().cols() != 1) {
    throw Error(Errc::LengthMismatch, "amplitude window: values and times differ");
  }
  const double h = 0.5 * (cfg.upper - cfg.lower);
  const double c = 0.5 * (cfg.upper + cfg.lower);
  ad::RMat window(n, 1);
  for (Eigen::Index k = 0; k < n; ++k) window(k, 0) = edge_window(times[static_cast<std::size_t>(k)], cfg);
  const ad::Var s = ad::sigmoid(ad::scale(ad::shift(omega, -c), cfg.g_amp / h));
  return ad::mul_const(ad::shift(ad::scale(s, 2.0 * h), c - h), window);
}

}  // namespace qoc::constraint
