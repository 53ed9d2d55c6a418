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

#include "qoc/baselines/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qoc/ad/ops.hpp"
#include "qoc/constraint/spectral.hpp"
#include "qoc/error.hpp"

namespace qoc::baselines {

namespace {

ad::RMat endpoint_mask(int n) {
  ad::RMat m = ad::RMat::Ones(n, 1);
  m(0, 0) = 0.0;
  m(n - 1, 0) = 0.0;
  return m;
}

}  // namespace

GrapeParametrization::GrapeParametrization(const quantum::Problem& problem, bool constrained)
    : problem_(problem), constrained_(constrained) {}

RVec GrapeParametrization::initial(const pulse::PwcSequence& s) const {
  if (s.size() != problem_.slices()) throw Error(Errc::LengthMismatch, "initial pulse has the wrong slice count");
  RVec x = Eigen::Map<const RVec>(s.values.data(), s.size());
  project(x);
  return x;
}

void GrapeParametrization::project(RVec& params) const {
  if (!constrained_) return;
  const auto& w = problem_.task().window;
  params = params.cwiseMax(w.lower).cwiseMin(w.upper);
  params[0] = 0.0;
  params[params.size() - 1] = 0.0;
}

int GrapeParametrization::report_harmonics() const { return constraint::max_harmonics(problem_.slices()); }

CrabBasis crab_basis(int nc, bool randomize, std::uint64_t seed) {
  if (nc < 1) throw Error(Errc::InvalidConfig, "CRAB basis needs at least one frequency");
  CrabBasis b;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);
  for (int n = 1; n <= nc; ++n) b.frequencies.push_back(randomize ? n + jitter(rng) : n);
  return b;
}

CrabParametrization::CrabParametrization(const quantum::Problem& problem, CrabBasis basis, bool constrained)
    : problem_(problem), basis_(std::move(basis)), constrained_(constrained) {
  const int n = problem_.slices();
  const auto nb = static_cast<Eigen::Index>(basis_.frequencies.size());
  const double t_gate = problem_.task().gate_time;
  synthesis_.resize(n, 2 * nb + 1);
  for (int k = 0; k < n; ++k) {
    const double t = problem_.times()[static_cast<std::size_t>(k)];
    synthesis_(k, 0) = 1.0;
    for (Eigen::Index j = 0; j < nb; ++j) {
      const double w = 2.0 * std::numbers::pi * basis_.frequencies[static_cast<std::size_t>(j)] / t_gate;
      synthesis_(k, 1 + j) = std::cos(w * t);
      synthesis_(k, 1 + nb + j) = std::sin(w * t);
    }
  }
  mask_ = endpoint_mask(n);
}

RVec CrabParametrization::initial(const pulse::PwcSequence& s) const {
  if (s.size() != problem_.slices()) throw Error(Errc::LengthMismatch, "initial pulse has the wrong slice count");
  // Least-squares fit of the basis to the sampled waveform.
  const RVec y = Eigen::Map<const RVec>(s.values.data(), s.size());
  return synthesis_.colPivHouseholderQr().solve(y);
}

ad::Var CrabParametrization::pre_node(ad::Var params) const { return ad::matvec_const(synthesis_, params); }

ad::Var CrabParametrization::post_node(ad::Var waveform) const {
  if (!constrained_) return waveform;
  const auto& w = problem_.task().window;
  return ad::mul_const(ad::clamp(waveform, w.lower, w.upper), mask_);
}

int CrabParametrization::report_harmonics() const { return constraint::max_harmonics(problem_.slices()); }

OptimizationResult run_grape_like(const quantum::Problem& problem, const std::vector<pulse::PwcSequence>& init,
                                  const RunOptions& options, RVec theta0) {
  if (static_cast<int>(init.size()) != problem.drive_count()) {
    throw Error(Errc::LengthMismatch, "expected one initial pulse per drive");
  }
  const GrapeParametrization param(problem, options.amplitude_node);
  std::vector<RVec> params;
  for (const pulse::PwcSequence& p : init) params.push_back(param.initial(p));
  return optimize::run_optimization(problem, param, std::move(params), std::move(theta0), options);
}

OptimizationResult run_crab_like(const quantum::Problem& problem, const std::vector<pulse::PwcSequence>& init,
                                 const RunOptions& options, bool randomize, RVec theta0) {
  if (static_cast<int>(init.size()) != problem.drive_count()) {
    throw Error(Errc::LengthMismatch, "expected one initial pulse per drive");
  }
  const CrabParametrization param(problem, crab_basis(problem.task().harmonics, randomize, options.seed),
                                  options.amplitude_node);
  std::vector<RVec> params;
  for (const pulse::PwcSequence& p : init) params.push_back(param.initial(p));
  return optimize::run_optimization(problem, param, std::move(params), std::move(theta0), options);
}

}  // namespace qoc::baselines
