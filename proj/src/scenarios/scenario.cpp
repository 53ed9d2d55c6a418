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

#include "qoc/scenarios/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qoc/ad/ops.hpp"
#include "qoc/baselines/baselines.hpp"
#include "qoc/constraint/spectral.hpp"
#include "qoc/error.hpp"
#include "qoc/quantum/targets.hpp"
#include "qoc/scenarios/swipht.hpp"
#include "qoc/units.hpp"

namespace qoc::scenarios {

namespace {

// SGD rate equivalent to 0.001 on amplitudes in rad/ns.
constexpr double kSgdCnotRate = 0.001 / (units::kMHz * units::kMHz);

Scenario model1_base() {
  Scenario s;
  s.model = ModelSpec{};
  s.drives = {DriveSpec{1, "00-01", std::nullopt}};
  return s;
}

Scenario model2_base() {
  Scenario s;
  s.model.kind = ModelKind::Model2;
  s.model.w1_ghz = 6.2;
  s.model.w2_ghz = 6.8;
  s.model.wc_ghz = 7.15;
  s.model.alpha1_mhz = -350.0;
  s.model.alpha2_mhz = -350.0;
  s.model.g_mhz = 250.0;
  s.model.levels = 3;
  s.model.cavity_levels = 3;
  s.drives = {DriveSpec{1, "00-01", std::nullopt}};
  return s;
}

Scenario cnot_base() {
  Scenario s = model2_base();
  s.target = "cnot";
  s.gate_time = 35.4;
  s.slices_per_ns = 4.0;
  s.harmonics = 9;
  s.readout = quantum::ReadoutFrame::Transition;
  s.init.kind = InitKind::Swipht;
  s.stop.max_iterations = 200;
  s.optimizer = {optimize::OptimizerKind::Sgd, kSgdCnotRate};
  s.phase_optimizer = {optimize::OptimizerKind::Sgd, 0.1};
  return s;
}

bool known_target(const std::string& t) {
  return t == "x1" || t == "x2" || t == "xx" || t == "identity" || t == "cnot";
}

bool known_resonance(const std::string& r) {
  return r == "00-01" || r == "00-10" || r == "10-11" || r == "01-11" || r == "mean";
}

double transition(const quantum::Subspace& sub, const std::string& r, int qubit) {
  const auto& e = sub.energies;
  if (r == "mean") {
    return qubit == 1 ? 0.5 * (e[1] - e[0] + e[3] - e[2]) : 0.5 * (e[2] - e[0] + e[3] - e[1]);
  }
  if (r == "00-01") return e[1] - e[0];
  if (r == "00-10") return e[2] - e[0];
  if (r == "10-11") return e[3] - e[2];
  if (r == "01-11") return e[3] - e[1];
  throw Error(Errc::InvalidConfig, "unknown resonance '" + r + "'");
}

quantum::DeviceModel bare_model(const ModelSpec& m) {
  if (m.kind == ModelKind::Model1) {
    return quantum::build_model1(m.w1_ghz, m.w2_ghz, m.alpha1_mhz, m.alpha2_mhz, m.g_mhz, m.levels);
  }
  return quantum::build_model2(m.w1_ghz, m.w2_ghz, m.wc_ghz, m.alpha1_mhz, m.alpha2_mhz, m.g_mhz, m.g_mhz,
                               m.levels, m.cavity_levels);
}

}  // namespace

int Scenario::slice_count() const {
  if (slices_per_ns > 0.0) return static_cast<int>(std::lround(slices_per_ns * gate_time));
  return slices;
}

std::vector<Scenario> catalog() {
  std::vector<Scenario> out;

  Scenario single = model1_base();
  single.name = "single-x";
  single.description = "Model 1, X on the second qubit with the first idle; T=50 ns, N=148, Nc=5, +-30 MHz";
  out.push_back(single);

  Scenario dual = model1_base();
  dual.name = "dual-x";
  dual.description = "Model 1, simultaneous X on both qubits, each drive resonant with its own qubit; N=200, 4 sub-steps";
  dual.drives = {DriveSpec{0, "00-10", std::nullopt}, DriveSpec{1, "00-01", std::nullopt}};
  dual.target = "xx";
  dual.readout = quantum::ReadoutFrame::Transition;
  dual.slices = 200;
  dual.substeps = 4;
  dual.stop.max_iterations = 5000;
  out.push_back(dual);

  Scenario nc = single;
  nc.name = "nc-sweep";
  nc.description = "single-x with the harmonic cutoff swept over 1..8";
  nc.axis = SweepAxis::Nc;
  nc.sweep_values = {1, 2, 3, 4, 5, 6, 7, 8};
  out.push_back(nc);

  Scenario cnot = cnot_base();
  cnot.name = "cnot-local";
  cnot.description = "Model 2 CNOT family, SWIPHT seed at T=35.4 ns refined by SGD with Nc=9";
  out.push_back(cnot);

  Scenario speed = cnot_base();
  speed.name = "cnot-speed-sweep";
  speed.description = "SWIPHT-seeded CNOT with the gate time swept over 25..36 ns (Adam refinement)";
  speed.optimizer = {optimize::OptimizerKind::Adam, 1.0};
  speed.phase_optimizer = {optimize::OptimizerKind::Adam, 0.01};
  speed.stop.max_iterations = 800;
  speed.stop.cost_tolerance = 1e-4;
  speed.axis = SweepAxis::Time;
  for (int t = 25; t <= 36; ++t) speed.sweep_values.push_back(t);
  out.push_back(speed);

  Scenario weak = model1_base();
  weak.name = "weak-coupling";
  weak.description = "single-x at g=1 MHz, T=20 ns, +-40 MHz";
  weak.model.g_mhz = 1.0;
  weak.gate_time = 20.0;
  weak.slices = 60;
  weak.lower = -40.0;
  weak.upper = 40.0;
  out.push_back(weak);

  Scenario strong = weak;
  strong.name = "strong-coupling";
  strong.description = "single-x at g=100 MHz, T=20 ns, +-40 MHz";
  strong.model.g_mhz = 100.0;
  out.push_back(strong);

  Scenario coupling = weak;
  coupling.name = "coupling-sweep";
  coupling.description = "single-x at T=20 ns, +-40 MHz with g swept over 1, 25.4, 100 MHz";
  coupling.axis = SweepAxis::Coupling;
  coupling.sweep_values = {1.0, 25.4, 100.0};
  out.push_back(coupling);

  Scenario m2 = model2_base();
  m2.name = "model2-single-x";
  m2.description = "Model 2, X on the second qubit; T=70 ns, N=210, Nc=5, +-20 MHz";
  m2.gate_time = 70.0;
  m2.slices = 210;
  m2.lower = -20.0;
  m2.upper = 20.0;
  out.push_back(m2);

  return out;
}

Scenario find_scenario(const std::string& name) {
  for (Scenario& s : catalog()) {
    if (s.name == name) return s;
  }
  throw Error(Errc::UnknownScenario, "no built-in scenario named '" + name + "'");
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Cocoa: return "cocoa";
    case Method::Grape: return "grape";
    case Method::Crab: return "crab";
  }
  return "?";
}

std::string_view axis_name(SweepAxis a) {
  switch (a) {
    case SweepAxis::None: return "none";
    case SweepAxis::Nc: return "nc";
    case SweepAxis::Time: return "time";
    case SweepAxis::Coupling: return "coupling";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  if (s == "cocoa") return Method::Cocoa;
  if (s == "grape") return Method::Grape;
  if (s == "crab") return Method::Crab;
  throw Error(Errc::UnknownMethod, "unknown method '" + s + "' (expected cocoa, grape or crab)");
}

SweepAxis parse_axis(const std::string& s) {
  if (s == "none") return SweepAxis::None;
  if (s == "nc") return SweepAxis::Nc;
  if (s == "time") return SweepAxis::Time;
  if (s == "coupling") return SweepAxis::Coupling;
  throw Error(Errc::InvalidConfig, "unknown sweep axis '" + s + "' (expected nc, time or coupling)");
}

std::vector<std::string> check(const Scenario& s) {
  std::vector<std::string> errs;
  auto need = [&errs](bool ok, const std::string& msg) {
    if (!ok) errs.push_back(msg);
  };
  need(!s.name.empty(), "name must not be empty");
  const ModelSpec& m = s.model;
  need(m.levels >= 2 && m.levels <= 6, "model.levels must be in [2, 6]");
  need(m.kind == ModelKind::Model1 || (m.cavity_levels >= 2 && m.cavity_levels <= 6),
       "model.cavity_levels must be in [2, 6]");
  need(m.w1_ghz > 0 && m.w2_ghz > 0 && (m.kind == ModelKind::Model1 || m.wc_ghz > 0),
       "model frequencies must be positive");
  need(std::isfinite(m.alpha1_mhz) && std::isfinite(m.alpha2_mhz) && std::isfinite(m.g_mhz),
       "model anharmonicities and coupling must be finite");
  need(!s.drives.empty(), "at least one drive is required");
  for (std::size_t i = 0; i < s.drives.size(); ++i) {
    const DriveSpec& d = s.drives[i];
    const std::string key = "drives[" + std::to_string(i) + "]";
    need(d.qubit == 0 || d.qubit == 1, key + ".qubit must be 0 or 1");
    if (d.frequency_ghz) {
      need(*d.frequency_ghz > 0, key + ".frequency_ghz must be positive");
    } else {
      need(known_resonance(d.resonance), key + ".resonance must be one of 00-01, 00-10, 10-11, 01-11, mean");
    }
    for (std::size_t j = 0; j < i; ++j) {
      need(s.drives[j].qubit != d.qubit, key + " drives a qubit that already has a drive");
    }
  }
  need(known_target(s.target), "target must be one of x1, x2, xx, identity, cnot");
  need(s.gate_time > 0 && std::isfinite(s.gate_time), "gate_time must be positive");
  need(s.slices_per_ns >= 0, "slices_per_ns must not be negative");
  const int n = s.slice_count();
  need(n >= 2, "slice count must be at least 2 (got " + std::to_string(n) + ")");
  const int bound = std::max(0, (n - 1) / 2);
  need(s.harmonics >= 0 && s.harmonics <= bound,
       "harmonics must be in [0, " + std::to_string(bound) + "] for N = " + std::to_string(n));
  need(s.substeps >= 1, "substeps must be at least 1");
  need(s.lower < s.upper, "bounds must satisfy lower < upper");
  need(s.optimizer.learning_rate > 0, "optimizer.learning_rate must be positive");
  need(s.phase_optimizer.learning_rate > 0, "optimizer.phase_learning_rate must be positive");
  need(s.stop.max_iterations >= 0, "optimizer.max_iterations must not be negative");
  need(s.stop.cost_tolerance >= 0 && s.stop.gradient_tolerance >= 0, "stop tolerances must not be negative");
  need(s.init.spread_mhz >= 0, "init.spread_mhz must not be negative");
  need(s.init.warmup_iterations >= 0, "init.warmup_iterations must not be negative");
  if (s.init.kind == InitKind::Swipht) {
    need(s.init.swipht_a > 0, "init.swipht_a must be positive");
    need(s.drives.size() == 1, "a SWIPHT seed needs exactly one drive");
  }
  if (s.axis != SweepAxis::None) need(!s.sweep_values.empty(), "sweep.values must not be empty");
  for (double v : s.sweep_values) {
    switch (s.axis) {
      case SweepAxis::Nc: {
        const bool integral = v == std::floor(v);
        need(integral && v >= 0 && v <= bound, "sweep value " + std::to_string(v) + " is not a harmonic count in [0, " +
                                                   std::to_string(bound) + "]");
        break;
      }
      case SweepAxis::Time:
        need(v > 0, "sweep gate times must be positive");
        if (v > 0 && s.slices_per_ns <= 0) {
          need(s.harmonics <= (s.slices - 1) / 2, "harmonics exceed the bound at swept gate times");
        }
        if (v > 0 && s.slices_per_ns > 0) {
          const int nv = static_cast<int>(std::lround(s.slices_per_ns * v));
          need(nv >= 2 && s.harmonics <= (nv - 1) / 2,
               "harmonics " + std::to_string(s.harmonics) + " exceed the bound " + std::to_string((nv - 1) / 2) +
                   " at T = " + std::to_string(v));
        }
        break;
      case SweepAxis::Coupling: need(std::isfinite(v) && v >= 0, "sweep couplings must be non-negative"); break;
      case SweepAxis::None: break;
    }
  }
  return errs;
}

void validate(const Scenario& s) {
  const auto errs = check(s);
  if (errs.empty()) return;
  std::ostringstream os;
  os << "scenario '" << s.name << "': ";
  for (std::size_t i = 0; i < errs.size(); ++i) os << (i ? "; " : "") << errs[i];
  throw Error(Errc::InvalidConfig, os.str());
}

quantum::DeviceModel build_model(const Scenario& s) {
  quantum::DeviceModel m = bare_model(s.model);
  const quantum::Subspace sub =
      quantum::dressed_subspace(quantum::static_hamiltonian(m, true), quantum::computational_labels(m));
  m.drives.clear();
  for (const DriveSpec& d : s.drives) {
    const double w = d.frequency_ghz ? *d.frequency_ghz * units::kGHz : transition(sub, d.resonance, d.qubit);
    m.drives.push_back({m.qubits[static_cast<std::size_t>(d.qubit)], w});
  }
  return m;
}

quantum::ControlTask build_task(const Scenario& s) {
  quantum::ControlTask t;
  const quantum::CMat id = quantum::CMat::Identity(2, 2);
  const quantum::CMat x = quantum::pauli_x();
  if (s.target == "cnot") {
    t.family = quantum::TargetFamily::Cnot;
    t.target = quantum::cnot();
  } else if (s.target == "x1") {
    t.target = quantum::kron(x, id);
  } else if (s.target == "x2") {
    t.target = quantum::kron(id, x);
  } else if (s.target == "xx") {
    t.target = quantum::kron(x, x);
  } else if (s.target == "identity") {
    t.target = quantum::CMat::Identity(4, 4);
  } else {
    throw Error(Errc::InvalidConfig, "unknown target '" + s.target + "'");
  }
  t.gate_time = s.gate_time;
  t.slices = s.slice_count();
  t.harmonics = s.harmonics;
  t.substeps = s.substeps;
  t.window = constraint::AmplitudeWindowConfig::for_gate(s.lower, s.upper, s.gate_time);
  t.readout = s.readout;
  return t;
}

double swipht_delta(const quantum::Problem& problem) { return problem.subspace().zz(); }

std::vector<pulse::PwcSequence> initial_pulses(const Scenario& s, const quantum::Problem& problem) {
  const int n = s.slice_count();
  std::vector<pulse::PwcSequence> out;
  if (s.init.kind == InitKind::Swipht) {
    const quantum::DeviceModel& m = problem.model();
    const quantum::Subspace& sub = problem.subspace();
    pulse::PwcSequence seed = swipht_sequence(s.init.swipht_a, s.gate_time, swipht_delta(problem), n);
    const quantum::CMat a = quantum::annihilation(m, m.drives.front().mode);
    const quantum::CMat xd = sub.basis.adjoint() * (a + a.adjoint()) * sub.basis;
    const int from = 0;
    const int to = s.drives.front().qubit == 1 ? 1 : 2;
    const double element = std::abs(xd(to, from));
    if (element > 0.0) {
      for (double& v : seed.values) v /= element;
    }
    out.push_back(std::move(seed));
    return out;
  }
  std::mt19937_64 rng(s.seed);
  std::uniform_real_distribution<double> amp(-s.init.spread_mhz, s.init.spread_mhz);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  for (std::size_t d = 0; d < s.drives.size(); ++d) {
    pulse::FourierPulse f;
    f.gate_time = s.gate_time;
    f.a0 = std::numbers::pi / (2.0 * units::kMHz * s.gate_time);
    for (int k = 0; k < s.harmonics; ++k) {
      const double a = amp(rng);
      f.harmonics.push_back({a, phase(rng)});
    }
    out.push_back(pulse::sample(f, n, s.gate_time));
  }
  return out;
}

optimize::RVec initial_theta(const Scenario& s, const quantum::Problem& problem,
                             const std::vector<pulse::PwcSequence>& seed) {
  if (problem.task().family != quantum::TargetFamily::Cnot) return {};
  optimize::RVec theta = optimize::RVec::Zero(6);
  theta[3] = std::numbers::pi;
  const quantum::CMat projected = problem.readout(problem.propagate(seed));
  optimize::OptimizerState state({optimize::OptimizerKind::Adam, s.init.warmup_learning_rate}, 6);
  for (int i = 0; i < s.init.warmup_iterations; ++i) {
    ad::Tape tape;
    const ad::Var leaf = tape.leaf(ad::Value(ad::RMat(theta)));
    const ad::Var cost = problem.infidelity_of_readout(projected, leaf);
    const auto grads = ad::backward(tape, cost);
    optimize::adam_step(theta, grads.at(leaf).real(), state);
  }
  return theta;
}

double out_of_band_ratio(const std::vector<double>& values, int nc) {
  const auto spectrum = constraint::dft(values);
  const auto n = static_cast<int>(spectrum.size());
  double peak = 0.0;
  double outside = 0.0;
  for (int m = 0; m < n; ++m) {
    const double mag = std::abs(spectrum[static_cast<std::size_t>(m)]);
    peak = std::max(peak, mag);
    if (m > nc && m < n - nc) outside = std::max(outside, mag);
  }
  return peak > 0.0 ? outside / peak : 0.0;
}

ScenarioResult run_scenario(const Scenario& s, const Progress& progress) {
  validate(s);
  quantum::Problem problem(build_model(s), build_task(s));
  ScenarioResult out;
  out.scenario = s;
  out.seed = initial_pulses(s, problem);
  const optimize::RVec theta0 = initial_theta(s, problem, out.seed);
  out.seed_infidelity = problem.infidelity(out.seed, theta0);

  optimize::RunOptions opt;
  opt.optimizer = s.optimizer;
  opt.phase_optimizer = s.phase_optimizer;
  opt.stop = s.stop;
  opt.seed = s.seed;
  opt.progress = progress;
  switch (s.method) {
    case Method::Cocoa: out.result = optimize::run_cocoa(problem, out.seed, opt, theta0); break;
    case Method::Grape: out.result = baselines::run_grape_like(problem, out.seed, opt, theta0); break;
    case Method::Crab:
      out.result = baselines::run_crab_like(problem, out.seed, opt, s.crab_randomize, theta0);
      break;
  }
  out.populations = problem.populations(out.result.pulses);
  for (const pulse::PwcSequence& p : out.result.pulses) {
    for (double v : p.values) {
      out.max_amplitude = std::max(out.max_amplitude, std::abs(v));
      if (v < s.lower || v > s.upper) out.within_bounds = false;
    }
    if (!p.values.empty()) {
      out.max_endpoint = std::max({out.max_endpoint, std::abs(p.values.front()), std::abs(p.values.back())});
    }
    if (s.method == Method::Cocoa) {
      out.spectral_leakage = std::max(out.spectral_leakage, out_of_band_ratio(p.values, s.harmonics));
    }
  }
  return out;
}

}  // namespace qoc::scenarios
