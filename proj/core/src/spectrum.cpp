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

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <vector>

#include "esdlab/error.hpp"
#include "esdlab/parallel.hpp"
#include "esdlab/random.hpp"
#include "esdlab/stochastic.hpp"

namespace esdlab {

namespace {

// Usable ordinates of every span are j in [kLowOrdinate, M / kTopFraction);
// the top one sits at a quarter of the Nyquist frequency.
constexpr std::size_t kLowOrdinate = 4;
constexpr std::size_t kTopFraction = 8;
constexpr std::size_t kMaxBlocks = 64;

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffers {
  explicit FftwBuffers(std::size_t m)
      : in(static_cast<double*>(fftw_malloc(sizeof(double) * m))),
        out(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (m / 2 + 1)))) {
    if (in == nullptr || out == nullptr) throw std::bad_alloc();
  }
  ~FftwBuffers() {
    fftw_free(in);
    fftw_free(out);
  }
  FftwBuffers(const FftwBuffers&) = delete;
  FftwBuffers& operator=(const FftwBuffers&) = delete;

  double* in;
  fftw_complex* out;
};

class R2cPlan {
 public:
  explicit R2cPlan(std::size_t m) : buffers_(m) {
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(m), buffers_.in, buffers_.out, FFTW_ESTIMATE);
    if (plan_ == nullptr) throw InvariantError("fftw: could not create plan");
  }
  ~R2cPlan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  R2cPlan(const R2cPlan&) = delete;
  R2cPlan& operator=(const R2cPlan&) = delete;

  void execute(FftwBuffers& b) const { fftw_execute_dft_r2c(plan_, b.in, b.out); }

 private:
  FftwBuffers buffers_;
  fftw_plan plan_ = nullptr;
};

struct Span {
  double record = 0.0;   // s
  double dt = 0.0;
  double cutoff = 0.0;   // fluctuators above this rate are skipped
  std::size_t ordinate_begin = 0;  // into the flat accumulator
};

struct Ordinate {
  double omega;
  double boxcar_gain;  // sinc^2(omega dt / 2)
  std::size_t bin;
  bool used;
};

// Bin averages of X(t) over M cells of width dt, starting from a fresh
// stationary state of every included fluctuator.
void sample_record(const FluctuatorEnsemble& ens, const Span& span, std::size_t m, Rng& rng,
                   std::vector<double>& diff, double* x) {
  std::fill(diff.begin(), diff.end(), 0.0);
  std::fill(x, x + m, 0.0);
  const double inv_dt = 1.0 / span.dt;
  for (std::size_t j = 0; j < ens.size(); ++j) {
    const double rate = ens.rates[j];
    if (rate > span.cutoff) continue;
    const double v = ens.couplings[j];
    double s = rng.sign();
    diff[0] += v * s;
    for (double t = rng.exponential(rate); t < span.record; t += rng.exponential(rate)) {
      const double cell = t * inv_dt;
      const auto n = std::min(static_cast<std::size_t>(cell), m - 1);
      const double delta = -2.0 * v * s;
      x[n] += delta * (static_cast<double>(n + 1) - cell);
      diff[n + 1] += delta;
      s = -s;
    }
  }
  double level = 0.0;
  for (std::size_t n = 0; n < m; ++n) {
    level += diff[n];
    x[n] += level;
  }
}

}  // namespace

double one_over_f_level(double omega, double sigma, double gamma_min, double gamma_max) {
  return std::numbers::pi * sigma * sigma / (std::log(gamma_max / gamma_min) * omega);
}

double psd_min_record(double omega_min) {
  return 2.0 * std::numbers::pi * static_cast<double>(kLowOrdinate) / omega_min;
}

PowerSpectrum psd_estimate(const FluctuatorEnsemble& ens, double t_max, std::size_t n_realizations,
                           std::uint64_t seed, const PsdOptions& options) {
  ens.validate();
  if (ens.size() == 0) throw ParameterError("psd_estimate: empty ensemble");
  if (n_realizations < 100) throw ParameterError("psd_estimate: need at least 100 realisations");
  const std::size_t m = options.span_points;
  if (m < 64 || (m & (m - 1)) != 0) throw ParameterError("psd_estimate: span_points must be a power of two >= 64");
  if (options.bins_per_decade < 1) throw ParameterError("psd_estimate: bins_per_decade must be >= 1");
  if (!(options.rate_cutoff > 0.0)) throw ParameterError("psd_estimate: rate_cutoff must be positive");

  const double w_lo = options.omega_min > 0.0 ? options.omega_min : 10.0 * ens.gamma_min;
  const double w_hi = options.omega_max > 0.0 ? options.omega_max : ens.gamma_max / 10.0;
  if (!(w_hi >= 10.0 * w_lo * (1.0 - 1e-12)))
    throw ParameterError("psd_estimate: fit band must span at least one decade");
  if (!std::isfinite(t_max) || t_max < psd_min_record(w_lo) * (1.0 - 1e-12))
    throw ParameterError("psd_estimate: t_max too short for omega_min");

  const auto n_bins = static_cast<std::size_t>(
      std::ceil(std::log10(w_hi / w_lo) * options.bins_per_decade - 1e-9));
  const double log_span = std::log(w_hi / w_lo);

  const std::size_t j_end = m / kTopFraction;
  const double span_ratio = static_cast<double>(j_end) / static_cast<double>(kLowOrdinate);
  std::vector<Span> spans;
  std::vector<Ordinate> ordinates;
  for (double record = t_max;; record /= span_ratio) {
    const double d_omega = 2.0 * std::numbers::pi / record;
    if (d_omega * static_cast<double>(kLowOrdinate) > w_hi) break;
    Span span;
    span.record = record;
    span.dt = record / static_cast<double>(m);
    span.cutoff = options.rate_cutoff * d_omega * static_cast<double>(j_end);
    span.ordinate_begin = ordinates.size();
    spans.push_back(span);
    for (std::size_t j = kLowOrdinate; j < j_end; ++j) {
      const double w = d_omega * static_cast<double>(j);
      const double half = 0.5 * w * span.dt;
      const double sinc = std::sin(half) / half;
      Ordinate o{w, sinc * sinc, 0, w >= w_lo && w <= w_hi};
      if (o.used) {
        const auto b = static_cast<std::size_t>(std::log(w / w_lo) / log_span * static_cast<double>(n_bins));
        o.bin = std::min(b, n_bins - 1);
      }
      ordinates.push_back(o);
    }
  }

  double window_power = 0.0;
  std::vector<double> window(m);
  for (std::size_t n = 0; n < m; ++n) {
    window[n] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(n) / static_cast<double>(m)));
    window_power += window[n] * window[n];
  }

  const R2cPlan plan(m);
  const std::size_t n_blocks = std::min(n_realizations, kMaxBlocks);
  std::vector<std::vector<double>> block_sums(n_blocks, std::vector<double>(ordinates.size(), 0.0));
  const std::size_t per_span = j_end - kLowOrdinate;

  parallel_for(n_blocks, worker_count(options.workers), [&](std::size_t b) {
    const std::size_t first = b * n_realizations / n_blocks;
    const std::size_t last = (b + 1) * n_realizations / n_blocks;
    FftwBuffers buf(m);
    std::vector<double> diff(m + 1);
    auto& acc = block_sums[b];
    for (std::size_t r = first; r < last; ++r) {
      for (std::size_t k = 0; k < spans.size(); ++k) {
        const Span& span = spans[k];
        Rng rng(derive_seed(seed, k, r));
        sample_record(ens, span, m, rng, diff, buf.in);
        for (std::size_t n = 0; n < m; ++n) buf.in[n] *= window[n];
        plan.execute(buf);
        const double norm = span.dt / window_power;
        for (std::size_t j = 0; j < per_span; ++j) {
          const auto& c = buf.out[kLowOrdinate + j];
          acc[span.ordinate_begin + j] += norm * (c[0] * c[0] + c[1] * c[1]);
        }
      }
    }
  });

  std::vector<double> total(ordinates.size(), 0.0);
  for (const auto& block : block_sums)
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += block[i];

  std::vector<double> est_sum(n_bins, 0.0), inv_omega_sum(n_bins, 0.0);
  std::vector<std::size_t> count(n_bins, 0);
  for (std::size_t i = 0; i < ordinates.size(); ++i) {
    const Ordinate& o = ordinates[i];
    if (!o.used) continue;
    est_sum[o.bin] += total[i] / static_cast<double>(n_realizations) / o.boxcar_gain;
    inv_omega_sum[o.bin] += 1.0 / o.omega;
    ++count[o.bin];
  }

  const double sigma = std::sqrt(ens.total_variance());
  PowerSpectrum out;
  for (std::size_t b = 0; b < n_bins; ++b) {
    if (count[b] == 0) continue;
    const double n = static_cast<double>(count[b]);
    const double w = n / inv_omega_sum[b];
    out.omega.push_back(w);
    out.s_estimated.push_back(est_sum[b] / n);
    out.s_target.push_back(one_over_f_level(w, sigma, ens.gamma_min, ens.gamma_max));
    out.ordinates.push_back(count[b]);
  }
  return out;
}

PowerLawFit fit_power_law(const PowerSpectrum& spectrum, double omega_lo, double omega_hi) {
  std::vector<double> lx, ly, lr;
  for (std::size_t k = 0; k < spectrum.omega.size(); ++k) {
    const double w = spectrum.omega[k];
    if (w < omega_lo || w > omega_hi) continue;
    if (!(spectrum.s_estimated[k] > 0.0)) throw InvariantError("fit_power_law: non-positive estimate");
    lx.push_back(std::log(w));
    ly.push_back(std::log(spectrum.s_estimated[k]));
    lr.push_back(std::log(spectrum.s_estimated[k] / spectrum.s_target[k]));
  }
  if (lx.size() < 2) throw ParameterError("fit_power_law: fewer than two bins in range");

  const double n = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0, mr = 0.0;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    mx += lx[k];
    my += ly[k];
    mr += lr[k];
  }
  mx /= n;
  my /= n;
  mr /= n;
  double sxx = 0.0, sxy = 0.0, worst = 0.0;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    sxx += (lx[k] - mx) * (lx[k] - mx);
    sxy += (lx[k] - mx) * (ly[k] - my);
    if (std::abs(lr[k]) > std::abs(worst)) worst = lr[k];
  }
  PowerLawFit fit;
  fit.slope = sxy / sxx;
  fit.amplitude_ratio = std::exp(mr);
  fit.worst_bin_ratio = std::exp(worst);
  fit.bins = lx.size();
  return fit;
}

}  // namespace esdlab
