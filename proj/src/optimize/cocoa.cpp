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

#include "qoc/optimize/cocoa.hpp"

#include <chrono>
#include <limits>
#include <cmath>
#include <optional>
#include <string>

#include "qoc/constraint/amplitude.hpp"
#include "qoc/constraint/spectral.hpp"
#include "qoc/error.hpp"

namespace qoc::optimize {

namespace {

pulse::PwcSequence to_sequence(const ad::Value& v, double dt) {
  pulse::PwcSequence s;
  s.dt = dt;
  const ad::RMat& m = v.real();
  s.values.assign(m.data(), m.data() + m.size());
  return s;
}

}  // namespace

CocoaParametrization::CocoaParametrization(const quantum::Problem& problem, bool amplitude_node, bool bandwidth_node)
    : problem_(problem), amplitude_(amplitude_node), bandwidth_(bandwidth_node) {}

RVec CocoaParametrization::initial(const pulse::PwcSequence& s) const {
  const quantum::ControlTask& task = problem_.task();
  if (s.size() != task.slices) throw Error(Errc::LengthMismatch, "initial pulse has the wrong slice count");
  RVec x(task.slices);
  for (int k = 0; k < task.slices; ++k) {
    const double v = s.values[static_cast<std::size_t>(k)];
    x[k] = amplitude_ ? constraint::unsquash(v, task.window) : v;
  }
  return x;
}

ad::Var CocoaParametrization::post_node(ad::Var waveform) const {
  ad::Var x = waveform;
  if (amplitude_) x = constraint::amplitude_window(x, problem_.times(), problem_.task().window);
  if (bandwidth_) x = constraint::band_limit(x, problem_.task().harmonics);
  return x;
}

int CocoaParametrization::report_harmonics() const {
  return bandwidth_ ? problem_.task().harmonics : constraint::max_harmonics(problem_.slices());
}

Evaluation evaluate(const quantum::Problem& problem, const Parametrization& param, const std::vector<RVec>& params,
                    const RVec& theta, bool with_gradient) {
  if (static_cast<int>(params.size()) != problem.drive_count()) {
    throw Error(Errc::LengthMismatch, "expected one parameter vector per drive");
  }
  ad::Tape tape;
  std::vector<ad::Var> leaves;
  std::vector<ad::Var> raw;
  std::vector<ad::Var> post;
  for (const RVec& p : params) {
    leaves.push_back(tape.leaf(ad::Value(ad::RMat(p)), with_gradient));
    raw.push_back(param.pre_node(leaves.back()));
    post.push_back(param.post_node(raw.back()));
  }
  const bool cnot = problem.task().family == quantum::TargetFamily::Cnot;
  std::optional<ad::Var> theta_leaf;
  if (cnot) theta_leaf = tape.leaf(ad::Value(ad::RMat(theta)), with_gradient);
  const ad::Var cost = problem.infidelity(post, theta_leaf);

  Evaluation e;
  e.cost = cost.value().item();
  const double dt = problem.task().dt();
  for (std::size_t j = 0; j < params.size(); ++j) {
    e.pulses.push_back(to_sequence(post[j].value(), dt));
    e.raw.push_back(to_sequence(raw[j].value(), dt));
  }
  if (!std::isfinite(e.cost)) return e;
  if (with_gradient) {
    const ad::GradientMap g = ad::backward(tape, cost);
    for (const ad::Var& leaf : leaves) e.gradients.push_back(g.at(leaf).real());
    if (theta_leaf) e.theta_gradient = g.at(*theta_leaf).real();
  }
  return e;
}

OptimizationResult run_optimization(const quantum::Problem& problem, const Parametrization& param,
                                    std::vector<RVec> params, RVec theta, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const bool cnot = problem.task().family == quantum::TargetFamily::Cnot;
  if (cnot && theta.size() != 6) theta = RVec::Zero(6);

  std::vector<OptimizerState> states;
  for (const RVec& p : params) states.emplace_back(options.optimizer, p.size());
  OptimizerState theta_state(options.phase_optimizer, theta.size());

  OptimizationResult r;
  r.method = std::string(param.method());
  r.seed = options.seed;
  Evaluation best_eval;
  double best = std::numeric_limits<double>::infinity();

  for (int iter = 0;; ++iter) {
    Evaluation e = evaluate(problem, param, params, theta, true);
    if (!std::isfinite(e.cost)) {
      throw Error(Errc::NonFiniteCost, "cost is not finite at iteration " + std::to_string(iter));
    }
    double norm2 = cnot ? e.theta_gradient.squaredNorm() : 0.0;
    for (const RVec& g : e.gradients) norm2 += g.squaredNorm();
    const double grad_norm = std::sqrt(norm2);

    r.trace.push_back(e.cost);
    r.gradient_norms.push_back(grad_norm);
    if (e.cost < best) {
      best = e.cost;
      r.best_iteration = iter;
      r.parameters = params;
      r.theta = theta;
      best_eval = e;
    }
    r.best_trace.push_back(best);
    if (options.progress) options.progress(iter, e.cost);

    r.reason = stop_check(e.cost, grad_norm, iter + 1, options.stop);
    if (r.reason != StopReason::Continue) break;

    for (std::size_t j = 0; j < params.size(); ++j) {
      optimizer_step(params[j], e.gradients[j], states[j]);
      param.project(params[j]);
    }
    if (cnot) optimizer_step(theta, e.theta_gradient, theta_state);
  }

  r.iterations = static_cast<int>(r.trace.size());
  r.best_infidelity = best;
  r.pulses = best_eval.pulses;
  r.raw = best_eval.raw;
  const int nc = param.report_harmonics();
  for (const pulse::PwcSequence& s : r.pulses) r.reports.push_back(pulse::extract_fourier_report(s, nc));
  r.propagator = problem.propagate(r.pulses);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

OptimizationResult run_cocoa(const quantum::Problem& problem, const std::vector<pulse::PwcSequence>& init,
                             const RunOptions& options, RVec theta0) {
  if (static_cast<int>(init.size()) != problem.drive_count()) {
    throw Error(Errc::LengthMismatch, "expected one initial pulse per drive");
  }
  const CocoaParametrization param(problem, options.amplitude_node, options.bandwidth_node);
  std::vector<RVec> params;
  for (const pulse::PwcSequence& p : init) params.push_back(param.initial(p));
  return run_optimization(problem, param, std::move(params), std::move(theta0), options);
}

}  // namespace qoc::optimize
