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

#include "qoc/optimize/optimizer.hpp"

#include <cmath>
#include <string>

#include "qoc/error.hpp"

namespace qoc::optimize {

namespace {

void check(const RVec& params, const RVec& grads, const OptimizerState& state) {
  if (params.size() != grads.size() || state.m.size() != params.size()) {
    throw Error(Errc::LengthMismatch, "parameter, gradient and optimizer sizes differ (" +
                                          std::to_string(params.size()) + ", " + std::to_string(grads.size()) +
                                          ", " + std::to_string(state.m.size()) + ")");
  }
  if (!grads.allFinite()) throw Error(Errc::NonFiniteGradient, "gradient has non-finite entries");
}

}  // namespace

OptimizerState::OptimizerState(OptimizerConfig cfg, Eigen::Index size)
    : config(cfg), m(RVec::Zero(size)), v(RVec::Zero(size)) {}

void adam_step(RVec& params, const RVec& grads, OptimizerState& state) {
  check(params, grads, state);
  const OptimizerConfig& c = state.config;
  ++state.step;
  state.m = c.beta1 * state.m + (1.0 - c.beta1) * grads;
  state.v = c.beta2 * state.v + (1.0 - c.beta2) * grads.cwiseAbs2();
  const double m_scale = 1.0 / (1.0 - std::pow(c.beta1, static_cast<double>(state.step)));
  const double v_scale = 1.0 / (1.0 - std::pow(c.beta2, static_cast<double>(state.step)));
  for (Eigen::Index i = 0; i < params.size(); ++i) {
    params[i] -= c.learning_rate * (state.m[i] * m_scale) / (std::sqrt(state.v[i] * v_scale) + c.epsilon);
  }
}

void sgd_step(RVec& params, const RVec& grads, OptimizerState& state) {
  check(params, grads, state);
  ++state.step;
  params -= state.config.learning_rate * grads;
}

void optimizer_step(RVec& params, const RVec& grads, OptimizerState& state) {
  if (state.config.kind == OptimizerKind::Adam) {
    adam_step(params, grads, state);
  } else {
    sgd_step(params, grads, state);
  }
}

std::string_view stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::Continue: return "continue";
    case StopReason::Cost: return "cost";
    case StopReason::Gradient: return "gradient";
    case StopReason::MaxIterations: return "max-iterations";
  }
  return "unknown";
}

std::string_view optimizer_name(OptimizerKind k) { return k == OptimizerKind::Adam ? "adam" : "sgd"; }

StopReason stop_check(double cost, double grad_norm, int iterations, const StopCriteria& stop) {
  if (cost < stop.cost_tolerance) return StopReason::Cost;
  if (grad_norm < stop.gradient_tolerance) return StopReason::Gradient;
  if (iterations >= stop.max_iterations) return StopReason::MaxIterations;
  return StopReason::Continue;
}

}  // namespace qoc::optimize
