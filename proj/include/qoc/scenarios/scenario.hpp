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
#include <optional>
#include <string>
#include <vector>

#include "qoc/optimize/cocoa.hpp"
#include "qoc/quantum/model.hpp"
#include "qoc/quantum/problem.hpp"

// Declarative experiment descriptions and the machinery to run them.
namespace qoc::scenarios {

enum class ModelKind { Model1, Model2 };
enum class Method { Cocoa, Grape, Crab };
enum class InitKind { Random, Swipht };
enum class SweepAxis { None, Nc, Time, Coupling };

// Cyclic units: GHz for frequencies, MHz for anharmonicities and couplings.
struct ModelSpec {
  ModelKind kind = ModelKind::Model1;
  double w1_ghz = 5.270;
  double w2_ghz = 4.670;
  double wc_ghz = 7.15;  // Model 2 cavity
  double alpha1_mhz = -220.0;
  double alpha2_mhz = -220.0;
  double g_mhz = 25.4;  // Model 1 qubit-qubit; Model 2 qubit-cavity (both)
  int levels = 4;
  int cavity_levels = 3;
};

// A drive on qubit 0 or 1. The carrier is either an explicit frequency or
// resonant with a dressed transition ("00-01", "00-10", "10-11", "01-11") or with
// the mean of the two transitions of its qubit ("mean").
struct DriveSpec {
  int qubit = 1;
  std::string resonance = "00-01";
  std::optional<double> frequency_ghz;
};

struct InitSpec {
  InitKind kind = InitKind::Random;
  double spread_mhz = 2.0;   // random harmonic amplitudes in [-spread, spread]
  double swipht_a = 138.9;
  int warmup_iterations = 2000;  // CNOT angle warm start on the fixed seed
  double warmup_learning_rate = 0.02;
};

struct Scenario {
  std::string name;
  std::string description;
  ModelSpec model;
  std::vector<DriveSpec> drives{DriveSpec{}};
  std::string target = "x2";  // x2 = I (x) X, x1 = X (x) I, xx, identity, cnot
  double gate_time = 50.0;
  int slices = 148;
  double slices_per_ns = 0.0;  // when > 0, slices = round(slices_per_ns * T)
  int harmonics = 5;
  int substeps = 1;  // propagation steps per pulse slice
  double lower = -30.0;
  double upper = 30.0;
  quantum::ReadoutFrame readout = quantum::ReadoutFrame::MeanDressed;
  InitSpec init;
  optimize::OptimizerConfig optimizer{optimize::OptimizerKind::Adam, 2.0};
  optimize::OptimizerConfig phase_optimizer{optimize::OptimizerKind::Adam, 0.01};
  optimize::StopCriteria stop;
  Method method = Method::Cocoa;
  bool crab_randomize = false;
  std::uint64_t seed = 7;
  SweepAxis axis = SweepAxis::None;
  std::vector<double> sweep_values;

  int slice_count() const;
};

std::vector<Scenario> catalog();
// Throws UnknownScenario.
Scenario find_scenario(const std::string& name);

std::string_view method_name(Method m);
std::string_view axis_name(SweepAxis a);
// Throw UnknownMethod / InvalidConfig.
Method parse_method(const std::string& s);
SweepAxis parse_axis(const std::string& s);

// Every violated precondition, one message each; empty when valid. Does not
// diagonalize anything.
std::vector<std::string> check(const Scenario& s);
// Throws InvalidConfig listing every problem.
void validate(const Scenario& s);

// Device with drive carriers resolved against the dressed spectrum.
quantum::DeviceModel build_model(const Scenario& s);
quantum::ControlTask build_task(const Scenario& s);
// Conditional shift of the driven transition, w(10->11) - w(00->01), rad/ns.
double swipht_delta(const quantum::Problem& problem);

// Seed pulses, one per drive (MHz).
std::vector<pulse::PwcSequence> initial_pulses(const Scenario& s, const quantum::Problem& problem);
// CNOT angles fitted to the seed propagator; empty for fixed targets.
optimize::RVec initial_theta(const Scenario& s, const quantum::Problem& problem,
                             const std::vector<pulse::PwcSequence>& seed);

struct ScenarioResult {
  Scenario scenario;
  optimize::OptimizationResult result;
  std::vector<pulse::PwcSequence> seed;
  double seed_infidelity = 1.0;
  ad::RMat populations;  // see Problem::populations
  double max_amplitude = 0.0;       // over all post-node pulses
  bool within_bounds = true;        // every post-node value in [lower, upper]
  double max_endpoint = 0.0;        // largest |first| or |last| value
  double spectral_leakage = 0.0;    // max |X[m]| / max |X| outside the kept band
};

using Progress = std::function<void(int iteration, double cost)>;

ScenarioResult run_scenario(const Scenario& s, const Progress& progress = {});

// Largest out-of-band bin of a sequence relative to its largest bin.
double out_of_band_ratio(const std::vector<double>& values, int nc);

}  // namespace qoc::scenarios
