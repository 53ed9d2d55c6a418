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
#include <vector>

#include "qoc/optimize/cocoa.hpp"

namespace qoc::baselines {

using optimize::OptimizationResult;
using optimize::RunOptions;
using optimize::RVec;

// Raw PWC values are the pulse. After every step values are clamped to the
// amplitude bounds and the first and last slice are set to zero.
class GrapeParametrization final : public optimize::Parametrization {
 public:
  explicit GrapeParametrization(const quantum::Problem& problem, bool constrained = true);
  std::string_view method() const override { return "grape"; }
  RVec initial(const pulse::PwcSequence& init) const override;
  ad::Var pre_node(ad::Var params) const override { return params; }
  ad::Var post_node(ad::Var waveform) const override { return waveform; }
  void project(RVec& params) const override;
  int report_harmonics() const override;

 private:
  const quantum::Problem& problem_;
  bool constrained_;
};

struct CrabBasis {
  std::vector<double> frequencies;  // in units of 1/T; harmonic grid is 1, 2, ..., N_c
};

// Harmonic grid 1..nc, or with each frequency jittered uniformly by up to
// +-0.5 when randomize is set.
CrabBasis crab_basis(int nc, bool randomize, std::uint64_t seed);

// Parameters (a0, a_1..a_n, b_1..b_n) of a0 + sum a_n cos(w_n t) + b_n sin(w_n t).
// The synthesized waveform is clamped to the bounds and its end slices zeroed
// before propagation.
class CrabParametrization final : public optimize::Parametrization {
 public:
  CrabParametrization(const quantum::Problem& problem, CrabBasis basis, bool constrained = true);
  std::string_view method() const override { return "crab"; }
  RVec initial(const pulse::PwcSequence& init) const override;
  ad::Var pre_node(ad::Var params) const override;
  ad::Var post_node(ad::Var waveform) const override;
  int report_harmonics() const override;
  const ad::RMat& synthesis() const { return synthesis_; }

 private:
  const quantum::Problem& problem_;
  CrabBasis basis_;
  bool constrained_;
  ad::RMat synthesis_;  // N x (2n + 1)
  ad::RMat mask_;
};

OptimizationResult run_grape_like(const quantum::Problem& problem, const std::vector<pulse::PwcSequence>& init,
                                  const RunOptions& options, RVec theta0 = RVec());
OptimizationResult run_crab_like(const quantum::Problem& problem, const std::vector<pulse::PwcSequence>& init,
                                 const RunOptions& options, bool randomize = false, RVec theta0 = RVec());

}  // namespace qoc::baselines
