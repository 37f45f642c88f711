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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "esdlab/error.hpp"
#include "esdlab/parallel.hpp"
#include "esdlab/random.hpp"
#include "esdlab/stochastic.hpp"

namespace esdlab {

namespace {

constexpr std::uint64_t kStreamEnsemble = 0x656e73;
constexpr std::uint64_t kStreamPaths = 0x706174;
constexpr std::size_t kMaxBlocks = 64;

// Qubit Hamiltonian in the eigenbasis of its static part:
//   h(X) = -(1/2)(Omega + X cos theta) tz + (1/2) X sin theta tx.
struct QubitField {
  double bx;
  double bz;
};

QubitField field(const AdiabaticParams& p, double x) {
  return {0.5 * x * std::sin(p.theta), -0.5 * (p.omega + x * std::cos(p.theta))};
}

Matrix2 hamiltonian(const QubitField& f) {
  Matrix2 h;
  h(0, 0) = f.bz;
  h(1, 1) = -f.bz;
  h(0, 1) = f.bx;
  h(1, 0) = f.bx;
  return h;
}

// exp(-i (bx tx + bz tz) dt)
Matrix2 propagator(const QubitField& f, double dt) {
  const double norm = std::hypot(f.bx, f.bz);
  Matrix2 u = Matrix2::identity();
  if (norm == 0.0 || dt == 0.0) return u;
  const double c = std::cos(norm * dt);
  const double s = std::sin(norm * dt) / norm;
  u(0, 0) = Complex(c, -s * f.bz);
  u(1, 1) = Complex(c, s * f.bz);
  u(0, 1) = Complex(0.0, -s * f.bx);
  u(1, 0) = Complex(0.0, -s * f.bx);
  return u;
}

// Lab sz written in the qubit eigenbasis.
Matrix2 lab_sz(const AdiabaticParams& p) {
  Matrix2 z;
  z(0, 0) = std::cos(p.theta);
  z(1, 1) = -std::cos(p.theta);
  z(0, 1) = -std::sin(p.theta);
  z(1, 0) = -std::sin(p.theta);
  return z;
}

class TraceCursor {
 public:
  explicit TraceCursor(const NoiseTrace& trace) : trace_(trace) {
    if (trace.times.empty() || trace.times.size() != trace.values.size() || trace.times.front() != 0.0)
      throw ParameterError("noise trace must start at t = 0");
  }
  double value() const { return trace_.values[index_]; }
  double next_break() const {
    return index_ + 1 < trace_.times.size() ? trace_.times[index_ + 1]
                                            : std::numeric_limits<double>::infinity();
  }
  void advance_to(double t) {
    while (index_ + 1 < trace_.times.size() && trace_.times[index_ + 1] <= t) ++index_;
  }

 private:
  const NoiseTrace& trace_;
  std::size_t index_ = 0;
};

Matrix4 hermitized(const Matrix4& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

void SimConfig::validate() const {
  if (n_trajectories == 0) throw ParameterError("sim: n_trajectories must be >= 1");
  if (n_samples < 2) throw ParameterError("sim: n_samples must be >= 2");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw ParameterError("sim: t_max must be positive");
  if (!std::isfinite(coupling_g)) throw ParameterError("sim: coupling must be finite");
  if (n_fluctuators == 0) throw ParameterError("sim: n_fluctuators must be >= 1");
  if (quantum.has_value())
    throw ParameterError("sim: quantum noise is not supported in trajectory simulations");
  qubit_a.validate();
  qubit_b.validate();
}

std::vector<double> SimConfig::sample_times() const {
  std::vector<double> t(n_samples);
  for (std::size_t k = 0; k < n_samples; ++k)
    t[k] = t_max * static_cast<double>(k) / static_cast<double>(n_samples - 1);
  t.back() = t_max;
  return t;
}

Trajectory evolve_trajectory(const DensityMatrix4& rho0, const NoiseTrace& noise_a,
                             const NoiseTrace& noise_b, const SimConfig& cfg) {
  cfg.validate();
  TraceCursor ca(noise_a), cb(noise_b);
  const bool coupled = cfg.coupling_g != 0.0;
  Matrix4 coupling;
  if (coupled) coupling = Complex(-0.5 * cfg.coupling_g) * kron(lab_sz(cfg.qubit_a), lab_sz(cfg.qubit_b));

  Trajectory out;
  out.times = cfg.sample_times();
  out.unitaries.reserve(out.times.size());
  out.states.reserve(out.times.size());

  Matrix2 ua = Matrix2::identity(), ub = Matrix2::identity();
  Matrix4 u = Matrix4::identity();
  double t = 0.0;
  for (double target : out.times) {
    while (t < target) {
      const double next = std::min({ca.next_break(), cb.next_break(), target});
      const double dt = next - t;
      const QubitField fa = field(cfg.qubit_a, ca.value());
      const QubitField fb = field(cfg.qubit_b, cb.value());
      if (coupled) {
        const Matrix4 h = kron(hamiltonian(fa), Matrix2::identity()) +
                          kron(Matrix2::identity(), hamiltonian(fb)) + coupling;
        u = unitary_exponential(h, dt) * u;
      } else {
        ua = propagator(fa, dt) * ua;
        ub = propagator(fb, dt) * ub;
      }
      t = next;
      ca.advance_to(t);
      cb.advance_to(t);
    }
    const Matrix4 uk = coupled ? u : kron(ua, ub);
    out.unitarity_defect = std::max(out.unitarity_defect, unitarity_defect(uk));
    out.states.push_back(uk * rho0.matrix() * uk.adjoint());
    out.unitaries.push_back(uk);
  }
  return out;
}

FluctuatorEnsemble simulation_ensemble(const SimConfig& cfg, int qubit) {
  if (qubit != 0 && qubit != 1) throw ParameterError("simulation_ensemble: qubit must be 0 or 1");
  const AdiabaticParams& p = qubit == 0 ? cfg.qubit_a : cfg.qubit_b;
  return sample_ensemble(cfg.n_fluctuators, p.gamma_min, p.gamma_max, p.sigma,
                         derive_seed(cfg.seed, kStreamEnsemble, static_cast<std::uint64_t>(qubit)));
}

MonteCarloResult monte_carlo_concurrence(const DensityMatrix4& rho0, const SimConfig& cfg) {
  cfg.validate();
  const FluctuatorEnsemble ens_a = simulation_ensemble(cfg, 0);
  const FluctuatorEnsemble ens_b = simulation_ensemble(cfg, 1);
  const std::size_t n_traj = cfg.n_trajectories;
  const std::size_t n_samples = cfg.n_samples;
  const std::size_t n_blocks = std::min(n_traj, kMaxBlocks);

  std::vector<std::vector<Matrix4>> block_sums(n_blocks, std::vector<Matrix4>(n_samples));
  std::vector<double> block_defect(n_blocks, 0.0);
  parallel_for(n_blocks, worker_count(cfg.workers), [&](std::size_t b) {
    const std::size_t first = b * n_traj / n_blocks;
    const std::size_t last = (b + 1) * n_traj / n_blocks;
    for (std::size_t k = first; k < last; ++k) {
      const RtnPaths pa = rtn_paths(ens_a, cfg.t_max, derive_seed(cfg.seed, kStreamPaths, 2 * k),
                                    InitialStates::kResample);
      const RtnPaths pb = rtn_paths(ens_b, cfg.t_max, derive_seed(cfg.seed, kStreamPaths, 2 * k + 1),
                                    InitialStates::kResample);
      const Trajectory traj = evolve_trajectory(rho0, noise_trace(ens_a, pa), noise_trace(ens_b, pb), cfg);
      for (std::size_t s = 0; s < n_samples; ++s) block_sums[b][s] += traj.states[s];
      block_defect[b] = std::max(block_defect[b], traj.unitarity_defect);
    }
  });

  MonteCarloResult result;
  result.curve.times = cfg.sample_times();
  result.curve.values.resize(n_samples);
  result.curve.stderr_values.assign(n_samples, 0.0);
  result.mean_states.reserve(n_samples);
  for (double d : block_defect) result.max_unitarity_defect = std::max(result.max_unitarity_defect, d);

  const double nb = static_cast<double>(n_blocks);
  std::vector<double> replicas(n_blocks);
  for (std::size_t s = 0; s < n_samples; ++s) {
    Matrix4 total;
    for (std::size_t b = 0; b < n_blocks; ++b) total += block_sums[b][s];
    const DensityMatrix4 mean(hermitized(Complex(1.0 / static_cast<double>(n_traj)) * total));
    result.curve.values[s] = wootters_concurrence(mean);
    result.mean_states.push_back(mean);
    if (n_blocks < 2) continue;

    double replica_mean = 0.0;
    for (std::size_t b = 0; b < n_blocks; ++b) {
      const std::size_t size = (b + 1) * n_traj / n_blocks - b * n_traj / n_blocks;
      const Matrix4 rest = Complex(1.0 / static_cast<double>(n_traj - size)) * (total - block_sums[b][s]);
      replicas[b] = wootters_concurrence(DensityMatrix4(hermitized(rest)));
      replica_mean += replicas[b];
    }
    replica_mean /= nb;
    double ss = 0.0;
    for (double c : replicas) ss += (c - replica_mean) * (c - replica_mean);
    result.curve.stderr_values[s] = std::sqrt((nb - 1.0) / nb * ss);
  }
  return result;
}

}  // namespace esdlab
