// Copyright 2026 The esdlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "esdlab/analysis.hpp"
#include "esdlab/random.hpp"

namespace {

using namespace esdlab;

AdiabaticParams qubit() {
  AdiabaticParams p;
  p.omega = 1e11;
  p.theta = std::numbers::pi / 2;
  p.sigma = 2e9;
  return p;
}

void BM_Wootters(benchmark::State& state) {
  const DensityMatrix4 rho = ewl_state(ewl_params(0.9, 0.3, BellFlavor::kPhi, 0.7));
  for (auto _ : state) benchmark::DoNotOptimize(wootters_concurrence(rho));
}
BENCHMARK(BM_Wootters);

void BM_XStateConcurrence(benchmark::State& state) {
  const DensityMatrix4 rho = ewl_state(ewl_params(0.9, 0.3, BellFlavor::kPhi, 0.7));
  for (auto _ : state) benchmark::DoNotOptimize(xstate_concurrence(rho));
}
BENCHMARK(BM_XStateConcurrence);

void BM_UnitaryExponential4(benchmark::State& state) {
  Matrix4 h = kron(pauli_z(), pauli_z());
  h += kron(pauli_x(), Matrix2::identity());
  for (auto _ : state) benchmark::DoNotOptimize(unitary_exponential(h, 0.37));
}
BENCHMARK(BM_UnitaryExponential4);

void BM_InterplayWitness(benchmark::State& state) {
  const AdiabaticParams p = qubit();
  const QuantumNoiseParams q{2e6, 0.04};
  const DensityMatrix4 rho0 = ewl_state(ewl_params(0.95, 0.5, BellFlavor::kPsi));
  double t = 1e-9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xstate_witness(evolve_two_qubit(t, rho0, p, p, q)).best());
    t *= 1.0000001;
  }
}
BENCHMARK(BM_InterplayWitness);

void BM_EsdSearch(benchmark::State& state) {
  Scenario s;
  s.state = ewl_params(0.91, 0.5, BellFlavor::kPhi);
  s.qubit_a = s.qubit_b = qubit();
  s.quantum = QuantumNoiseParams{2e6, 0.04};
  const WitnessFn f = channel_witness(Channel::kInterplay, s);
  for (auto _ : state) benchmark::DoNotOptimize(find_esd_time(f, 1e-3, 1e-10, {.omega_ref = 1e11}));
}
BENCHMARK(BM_EsdSearch)->Unit(benchmark::kMillisecond);

void BM_Trajectory(benchmark::State& state) {
  SimConfig cfg;
  cfg.qubit_a = cfg.qubit_b = qubit();
  cfg.t_max = 5e-8;
  cfg.coupling_g = static_cast<double>(state.range(0));
  cfg.n_fluctuators = 250;
  const DensityMatrix4 rho0 = ewl_state(ewl_params(1.0, 0.5, BellFlavor::kPsi));
  const FluctuatorEnsemble ea = simulation_ensemble(cfg, 0), eb = simulation_ensemble(cfg, 1);
  std::uint64_t k = 0;
  for (auto _ : state) {
    const NoiseTrace na = noise_trace(ea, rtn_paths(ea, cfg.t_max, derive_seed(1, 0x706174, 2 * k)));
    const NoiseTrace nb = noise_trace(eb, rtn_paths(eb, cfg.t_max, derive_seed(1, 0x706174, 2 * k + 1)));
    benchmark::DoNotOptimize(evolve_trajectory(rho0, na, nb, cfg));
    ++k;
  }
}
BENCHMARK(BM_Trajectory)->Arg(0)->Arg(1000000000)->Unit(benchmark::kMicrosecond);

void BM_PsdSpan(benchmark::State& state) {
  const FluctuatorEnsemble ens = sample_ensemble(250, 1.0, 1e6, 2e9, 7);
  PsdOptions opt;
  opt.omega_min = 1e3;
  opt.omega_max = 1e4;
  opt.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(psd_estimate(ens, psd_min_record(1e3), 100, 3, opt));
}
BENCHMARK(BM_PsdSpan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
