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

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qoc/ad/tape.hpp"
#include "qoc/optimize/optimizer.hpp"
#include "qoc/pulse/pulse.hpp"
#include "qoc/quantum/problem.hpp"

namespace qoc::optimize {

using ad::CMat;

struct RunOptions {
  OptimizerConfig optimizer;
  // Used for the CNOT family's rotation angles.
  OptimizerConfig phase_optimizer{OptimizerKind::Adam, 0.01};
  StopCriteria stop;
  bool amplitude_node = true;
  bool bandwidth_node = true;
  std::uint64_t seed = 0;
  std::function<void(int iteration, double cost)> progress;
};

struct OptimizationResult {
  std::string method;
  std::vector<RVec> parameters;               // best iterate
  std::vector<pulse::PwcSequence> raw;        // pre-constraint waveforms
  std::vector<pulse::PwcSequence> pulses;     // post-node waveforms
  std::vector<pulse::FourierPulse> reports;   // amplitude/phase form of pulses
  RVec theta;
  std::vector<double> trace;                  // cost per iteration
  std::vector<double> best_trace;             // best-so-far cost
  std::vector<double> gradient_norms;
  StopReason reason = StopReason::Continue;
  int iterations = 0;
  int best_iteration = 0;
  double best_infidelity = 1.0;
  CMat propagator;                            // U_T of the best iterate, simulation frame
  double seconds = 0.0;
  std::uint64_t seed = 0;

  bool converged() const { return reason == StopReason::Cost || reason == StopReason::Gradient; }
};

// Maps one parameter vector per drive to the waveform fed to the propagator.
class Parametrization {
 public:
  virtual ~Parametrization() = default;
  virtual std::string_view method() const = 0;
  // Parameters whose waveform approximates a sampled initial pulse.
  virtual RVec initial(const pulse::PwcSequence& init) const = 0;
  virtual ad::Var pre_node(ad::Var params) const = 0;
  virtual ad::Var post_node(ad::Var waveform) const = 0;
  // Applied to the parameters after every optimizer step.
  virtual void project(RVec&) const {}
  virtual int report_harmonics() const = 0;
};

class CocoaParametrization final : public Parametrization {
 public:
  CocoaParametrization(const quantum::Problem& problem, bool amplitude_node, bool bandwidth_node);
  std::string_view method() const override { return "cocoa"; }
  RVec initial(const pulse::PwcSequence& init) const override;
  ad::Var pre_node(ad::Var params) const override { return params; }
  ad::Var post_node(ad::Var waveform) const override;
  int report_harmonics() const override;

 private:
  const quantum::Problem& problem_;
  bool amplitude_;
  bool bandwidth_;
};

// Gradient loop shared by every method. theta0 seeds the CNOT angles.
OptimizationResult run_optimization(const quantum::Problem& problem, const Parametrization& param,
                                    std::vector<RVec> initial, RVec theta0, const RunOptions& options);

OptimizationResult run_cocoa(const quantum::Problem& problem, const std::vector<pulse::PwcSequence>& init,
                             const RunOptions& options, RVec theta0 = RVec());

// Cost and gradients (one vector per drive, then theta) at a parameter point.
struct Evaluation {
  double cost = 0.0;
  std::vector<RVec> gradients;
  RVec theta_gradient;
  std::vector<pulse::PwcSequence> pulses;
  std::vector<pulse::PwcSequence> raw;
};
Evaluation evaluate(const quantum::Problem& problem, const Parametrization& param, const std::vector<RVec>& params,
                    const RVec& theta, bool with_gradient);

}  // namespace qoc::optimize
