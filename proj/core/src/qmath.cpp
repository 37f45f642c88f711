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

#include "esdlab/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "esdlab/constants.hpp"
#include "esdlab/error.hpp"

namespace esdlab {

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

Matrix4 outer(const Vector4& v) {
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out(i, j) = v[i] * std::conj(v[j]);
  return out;
}

Matrix2 pauli_x() {
  Matrix2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Matrix2 pauli_y() {
  Matrix2 m;
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

Matrix2 pauli_z() {
  Matrix2 m;
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

// ---------------------------------------------------------------------------
// Jacobi eigensolver

template <std::size_t N>
EigenSystem<N> hermitian_eigensystem(const SquareMatrix<N>& m) {
  double magnitude = 1.0;
  for (const auto& x : m.data()) magnitude = std::max(magnitude, std::abs(x));
  if (const double defect = hermiticity_defect(m); defect > tol::kEigenInputHermiticity * magnitude) {
    std::ostringstream msg;
    msg << "hermitian_eigensystem: matrix is not Hermitian (defect " << defect << ")";
    throw InvariantError(msg.str());
  }

  SquareMatrix<N> a = (m + m.adjoint()) * Complex(0.5);
  SquareMatrix<N> v = SquareMatrix<N>::identity();

  double scale = 0.0;
  for (const auto& x : a.data()) scale += std::norm(x);

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) off += std::norm(a(p, q));
    if (off <= 1e-34 * scale || off == 0.0) break;

    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        const Complex phase = a(p, q) / mag;
        const Complex phase_c = std::conj(phase);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
        const double c = std::cos(theta);
        const double s = std::sin(theta);

        // G = diag(.., 1, .., conj(phase), ..) * R(theta) on the (p, q) plane.
        const Complex gpp = c, gpq = s, gqp = -s * phase_c, gqq = c * phase_c;

        for (std::size_t k = 0; k < N; ++k) {  // A <- A G
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < N; ++k) {  // A <- G^dagger A
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        for (std::size_t k = 0; k < N; ++k) {  // V <- V G
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });

  EigenSystem<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < N; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

template EigenSystem<2> hermitian_eigensystem(const SquareMatrix<2>&);
template EigenSystem<4> hermitian_eigensystem(const SquareMatrix<4>&);

std::array<double, 4> hermitian_eigenvalues(const Matrix4& m) { return hermitian_eigensystem(m).values; }

template <std::size_t N>
SquareMatrix<N> unitary_exponential(const SquareMatrix<N>& h, double t) {
  const EigenSystem<N> es = hermitian_eigensystem(h);
  SquareMatrix<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    const Complex phase = std::polar(1.0, -es.values[k] * t);
    for (std::size_t i = 0; i < N; ++i) {
      const Complex vik = es.vectors(i, k) * phase;
      for (std::size_t j = 0; j < N; ++j) out(i, j) += vik * std::conj(es.vectors(j, k));
    }
  }
  return out;
}

template SquareMatrix<2> unitary_exponential(const SquareMatrix<2>&, double);
template SquareMatrix<4> unitary_exponential(const SquareMatrix<4>&, double);

// ---------------------------------------------------------------------------
// DensityMatrix4

std::optional<std::string> DensityMatrix4::violation(const Matrix4& m) {
  std::ostringstream msg;
  if (const double h = hermiticity_defect(m); !(h <= tol::kHermiticity)) {
    msg << "density matrix is not Hermitian (defect " << h << ")";
    return msg.str();
  }
  if (const double t = std::abs(m.trace() - 1.0); !(t <= tol::kTrace)) {
    msg << "density matrix trace deviates from 1 by " << t;
    return msg.str();
  }
  const auto eig = hermitian_eigenvalues(m);
  if (!(eig[3] >= -tol::kPositivity)) {
    msg << "density matrix has negative eigenvalue " << eig[3];
    return msg.str();
  }
  return std::nullopt;
}

DensityMatrix4::DensityMatrix4(const Matrix4& m) : m_(m) {
  if (auto why = violation(m)) throw InvariantError(*why);
}

// ---------------------------------------------------------------------------
// Concurrence

namespace {

// Columns f_k of a factor F with rho = F F^dagger (diagonally pivoted
// Cholesky). Stops at the first non-positive pivot, which also discards the
// slightly negative part of a numerically PSD input.
std::size_t cholesky_factor(Matrix4 r, std::array<Vector4, 4>& cols) {
  std::array<bool, 4> used{};
  std::size_t rank = 0;
  for (; rank < 4; ++rank) {
    std::size_t pivot = 4;
    double best = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
      if (!used[j] && r(j, j).real() > best) {
        best = r(j, j).real();
        pivot = j;
      }
    }
    if (pivot == 4) break;
    used[pivot] = true;
    const double root = std::sqrt(best);
    Vector4& f = cols[rank];
    for (std::size_t i = 0; i < 4; ++i) f[i] = used[i] && i != pivot ? Complex(0.0) : r(i, pivot) / root;
    f[pivot] = root;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) r(i, j) -= f[i] * std::conj(f[j]);
  }
  return rank;
}

// (sy x sy) conj(f)
Vector4 spin_flip(const Vector4& f) {
  return {-std::conj(f[3]), std::conj(f[2]), std::conj(f[1]), -std::conj(f[0])};
}

// Singular values of the n x n leading block of `t` (columns), one-sided
// Jacobi. Returned unsorted.
std::array<double, 4> singular_values(std::array<Vector4, 4> cols, std::size_t n) {
  for (int sweep = 0; sweep < 64; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double alpha = 0.0, beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          alpha += std::norm(cols[i][k]);
          beta += std::norm(cols[j][k]);
          gamma += std::conj(cols[i][k]) * cols[j][k];
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= 1e-16 * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Complex phase_c = std::conj(gamma / g);
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex xi = cols[i][k];
          const Complex xj = cols[j][k] * phase_c;
          cols[i][k] = c * xi - s * xj;
          cols[j][k] = s * xi + c * xj;
        }
      }
    }
    if (!rotated) break;
  }
  std::array<double, 4> sv{};
  for (std::size_t i = 0; i < n; ++i) {
    double nrm = 0.0;
    for (std::size_t k = 0; k < n; ++k) nrm += std::norm(cols[i][k]);
    sv[i] = std::sqrt(nrm);
  }
  return sv;
}

}  // namespace

double wootters_concurrence(const DensityMatrix4& rho) {
  // The square roots of the eigenvalues of rho * rho_tilde are the singular
  // values of T_ab = f_a^dagger (sy x sy) conj(f_b) for any rho = F F^dagger.
  std::array<Vector4, 4> f{};
  const std::size_t rank = cholesky_factor(rho.matrix(), f);
  if (rank == 0) return 0.0;

  std::array<Vector4, 4> t{};  // t[b][a] = T_ab, stored by column
  for (std::size_t b = 0; b < rank; ++b) {
    const Vector4 flipped = spin_flip(f[b]);
    for (std::size_t a = 0; a < rank; ++a) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < 4; ++k) acc += std::conj(f[a][k]) * flipped[k];
      t[b][a] = acc;
    }
  }
  auto sv = singular_values(t, rank);
  std::sort(sv.begin(), sv.end(), std::greater<>());
  const double c = sv[0] - sv[1] - sv[2] - sv[3];
  return std::clamp(c, 0.0, 1.0);
}

bool is_x_state(const DensityMatrix4& rho, double tol) {
  static constexpr std::array<std::pair<int, int>, 8> kOffX = {
      {{0, 1}, {0, 2}, {1, 0}, {1, 3}, {2, 0}, {2, 3}, {3, 1}, {3, 2}}};
  return std::all_of(kOffX.begin(), kOffX.end(),
                     [&](auto rc) { return std::abs(rho(rc.first, rc.second)) <= tol; });
}

// ---------------------------------------------------------------------------
// SingleQubitMap

SingleQubitMap SingleQubitMap::identity() {
  SingleQubitMap m;
  for (int i = 0; i < 2; ++i)
    for (int ip = 0; ip < 2; ++ip) m(i, ip, i, ip) = 1.0;
  return m;
}

double SingleQubitMap::trace_defect() const {
  double worst = 0.0;
  for (int l = 0; l < 2; ++l)
    for (int lp = 0; lp < 2; ++lp) {
      const Complex tr = (*this)(0, 0, l, lp) + (*this)(1, 1, l, lp);
      worst = std::max(worst, std::abs(tr - (l == lp ? 1.0 : 0.0)));
    }
  return worst;
}

double SingleQubitMap::hermiticity_defect() const {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int ip = 0; ip < 2; ++ip)
      for (int l = 0; l < 2; ++l)
        for (int lp = 0; lp < 2; ++lp)
          worst = std::max(worst, std::abs((*this)(i, ip, l, lp) - std::conj((*this)(ip, i, lp, l))));
  return worst;
}

void SingleQubitMap::validate() const {
  if (const double d = trace_defect(); !(d <= tol::kMapTrace)) {
    std::ostringstream msg;
    msg << "single-qubit map is not trace preserving (defect " << d << ")";
    throw InvariantError(msg.str());
  }
  if (const double d = hermiticity_defect(); !(d <= tol::kMapHermiticity)) {
    std::ostringstream msg;
    msg << "single-qubit map is not Hermiticity preserving (defect " << d << ")";
    throw InvariantError(msg.str());
  }
}

Matrix2 SingleQubitMap::apply(const Matrix2& rho) const {
  Matrix2 out;
  for (int i = 0; i < 2; ++i)
    for (int ip = 0; ip < 2; ++ip)
      for (int l = 0; l < 2; ++l)
        for (int lp = 0; lp < 2; ++lp) out(i, ip) += (*this)(i, ip, l, lp) * rho(l, lp);
  return out;
}

}  // namespace esdlab
