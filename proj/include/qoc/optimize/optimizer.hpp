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

#include <string_view>

#include "qoc/ad/value.hpp"

namespace qoc::optimize {

using ad::RVec;

enum class OptimizerKind { Adam, Sgd };

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::Adam;
  double learning_rate = 0.01;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct OptimizerState {
  OptimizerConfig config;
  RVec m;
  RVec v;
  long step = 0;

  OptimizerState() = default;
  OptimizerState(OptimizerConfig cfg, Eigen::Index size);
};

// Bias-corrected Adam. Throws LengthMismatch or NonFiniteGradient.
void adam_step(RVec& params, const RVec& grads, OptimizerState& state);
void sgd_step(RVec& params, const RVec& grads, OptimizerState& state);
// Dispatches on state.config.kind.
void optimizer_step(RVec& params, const RVec& grads, OptimizerState& state);

enum class StopReason { Continue, Cost, Gradient, MaxIterations };

std::string_view stop_reason_name(StopReason r);

struct StopCriteria {
  double cost_tolerance = 1e-6;      // epsilon_0
  double gradient_tolerance = 1e-9;  // epsilon_1
  int max_iterations = 3000;         // R
};

// First satisfied criterion in the order cost, gradient, iteration cap.
StopReason stop_check(double cost, double grad_norm, int iterations, const StopCriteria& stop);

std::string_view optimizer_name(OptimizerKind k);

}  // namespace qoc::optimize
