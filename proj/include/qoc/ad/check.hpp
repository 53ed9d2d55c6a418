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

#include <functional>

#include "qoc/ad/tape.hpp"

namespace qoc::ad {

// Builds a scalar on the given tape from a real vector leaf.
using TapeFunction = std::function<Var(Tape&, Var x)>;

struct GradientCheck {
  double max_relative_error = 0.0;
  RVec ad;
  RVec fd;
};

// Compares the reverse-mode gradient at x with central differences of step h.
// Every probe runs on a fresh tape. Relative errors use max(|fd_i|, 1e-12).
GradientCheck compare_gradient(const TapeFunction& f, const RVec& x, double h);
double check_gradient(const TapeFunction& f, const RVec& x, double h);

// Scalar value and gradient of f at x.
double evaluate(const TapeFunction& f, const RVec& x, RVec* grad = nullptr);

}  // namespace qoc::ad
