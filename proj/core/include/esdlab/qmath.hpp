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

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>

namespace esdlab {

using Complex = std::complex<double>;

/// Dense N x N complex matrix, row-major, value semantics.
template <std::size_t N>
class SquareMatrix {
 public:
  static constexpr std::size_t kDim = N;

  constexpr SquareMatrix() = default;

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * N + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * N + col];
  }

  SquareMatrix adjoint() const {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out(i, j) = std::conj((*this)(j, i));
    return out;
  }

  SquareMatrix conjugate() const {
    SquareMatrix out;
    for (std::size_t k = 0; k < N * N; ++k) out.data_[k] = std::conj(data_[k]);
    return out;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  SquareMatrix& operator+=(const SquareMatrix& rhs) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += rhs.data_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& rhs) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= rhs.data_[k];
    return *this;
  }
  SquareMatrix& operator*=(Complex s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix lhs, const SquareMatrix& rhs) { return lhs += rhs; }
  friend SquareMatrix operator-(SquareMatrix lhs, const SquareMatrix& rhs) { return lhs -= rhs; }
  friend SquareMatrix operator*(SquareMatrix m, Complex s) { return m *= s; }
  friend SquareMatrix operator*(Complex s, SquareMatrix m) { return m *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        for (std::size_t j = 0; j < N; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  const std::array<Complex, N * N>& data() const { return data_; }

 private:
  std::array<Complex, N * N> data_{};
};

using Matrix2 = SquareMatrix<2>;
using Matrix4 = SquareMatrix<4>;
using Vector4 = std::array<Complex, 4>;

/// a (x) b with the first factor as the most significant index: |ij> -> 2i+j.
Matrix4 kron(const Matrix2& a, const Matrix2& b);

/// |v><v|
Matrix4 outer(const Vector4& v);

/// max_ij |m_ij - conj(m_ji)|
template <std::size_t N>
double hermiticity_defect(const SquareMatrix<N>& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

/// max_ij |a_ij - b_ij|
template <std::size_t N>
double max_abs_difference(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < N * N; ++k) worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
  return worst;
}

/// Eigenvalues in descending order; `vectors` holds the matching unit
/// eigenvectors as columns.
template <std::size_t N>
struct EigenSystem {
  std::array<double, N> values{};
  SquareMatrix<N> vectors;
};

/// Cyclic complex Jacobi diagonalisation of a Hermitian matrix.
/// Throws InvariantError when the input is not Hermitian within
/// tol::kEigenInputHermiticity times max(1, max_ij |m_ij|).
template <std::size_t N>
EigenSystem<N> hermitian_eigensystem(const SquareMatrix<N>& m);

extern template EigenSystem<2> hermitian_eigensystem(const SquareMatrix<2>&);
extern template EigenSystem<4> hermitian_eigensystem(const SquareMatrix<4>&);

/// Eigenvalues of a 4x4 Hermitian matrix, descending.
std::array<double, 4> hermitian_eigenvalues(const Matrix4& m);

/// exp(-i h t) for Hermitian h, through its eigendecomposition.
template <std::size_t N>
SquareMatrix<N> unitary_exponential(const SquareMatrix<N>& h, double t);

extern template SquareMatrix<2> unitary_exponential(const SquareMatrix<2>&, double);
extern template SquareMatrix<4> unitary_exponential(const SquareMatrix<4>&, double);

/// max_ij |(U^dagger U - I)_ij|
template <std::size_t N>
double unitarity_defect(const SquareMatrix<N>& u) {
  return max_abs_difference(u.adjoint() * u, SquareMatrix<N>::identity());
}

/// Two-qubit density matrix in the computational basis
/// {|00>, |01>, |10>, |11>} (labels 0..3). Construction validates
/// Hermiticity, unit trace and positive semidefiniteness.
class DensityMatrix4 {
 public:
  explicit DensityMatrix4(const Matrix4& m);

  /// Describes the first violated invariant, or nullopt if `m` is valid.
  static std::optional<std::string> violation(const Matrix4& m);

  const Matrix4& matrix() const { return m_; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return m_(row, col); }

 private:
  Matrix4 m_;
};

/// Wootters concurrence, max(0, s1 - s2 - s3 - s4) with s_k the square roots
/// of the eigenvalues of rho (sy x sy) rho* (sy x sy). The result is in [0, 1].
double wootters_concurrence(const DensityMatrix4& rho);

/// True when all eight elements off the diagonal and anti-diagonal have
/// modulus at most `tol`.
bool is_x_state(const DensityMatrix4& rho, double tol);

/// Linear single-qubit channel in transfer form:
///   rho_{ii'}(t) = sum_{ll'} A_{ii'}^{ll'} rho_{ll'}(0).
class SingleQubitMap {
 public:
  SingleQubitMap() = default;  // the zero map; see identity()

  static SingleQubitMap identity();

  Complex& operator()(int i, int ip, int l, int lp) { return a_[index(i, ip, l, lp)]; }
  const Complex& operator()(int i, int ip, int l, int lp) const { return a_[index(i, ip, l, lp)]; }

  /// max over (l, l') of |sum_i A_{ii}^{ll'} - delta_{ll'}|
  double trace_defect() const;
  /// max |A_{ii'}^{ll'} - conj(A_{i'i}^{l'l})|
  double hermiticity_defect() const;
  /// Throws InvariantError when either defect exceeds its tolerance.
  void validate() const;

  Matrix2 apply(const Matrix2& rho) const;

 private:
  static constexpr std::size_t index(int i, int ip, int l, int lp) {
    return static_cast<std::size_t>(((i * 2 + ip) * 2 + l) * 2 + lp);
  }
  std::array<Complex, 16> a_{};
};

/// Pauli matrices.
Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();

}  // namespace esdlab
