// Copyright 2026 The ptnc Authors
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

// Dense complex matrices of dimension 2 and 4 together with the handful of
// Hermitian-centric operations the rest of the library needs: Kronecker
// products, partial trace and transpose, a Jacobi eigensolver, PSD square
// roots and trace norms.
//
// Two-qubit matrices always use the basis order {|00>, |01>, |10>, |11>}
// with the first tensor factor being subsystem A.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace ptnc {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Absolute tolerance used by the predicates when none is supplied.
inline constexpr double kDefaultTol = 1e-10;

/// Eigenvalues of PSD operands above -kPsdFloor are clamped to zero.
inline constexpr double kPsdFloor = 1e-12;

enum class Subsystem { A, B };

template <std::size_t N>
using Ket = std::array<Complex, N>;
using Ket2 = Ket<2>;
using Ket4 = Ket<4>;

class ComplexMatrix {
 public:
  static constexpr std::size_t kMaxDim = 4;

  /// Zero matrix. Throws DimensionError unless dim is 2 or 4.
  explicit ComplexMatrix(std::size_t dim);

  /// Row-major entries; the list must hold exactly dim*dim finite values.
  ComplexMatrix(std::size_t dim, std::initializer_list<Complex> row_major);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::initializer_list<Complex> entries);
  static ComplexMatrix diagonal(std::span<const double> entries);

  /// |k><k| for a ket of length 2 or 4.
  static ComplexMatrix outer(std::span<const Complex> ket);

  /// |k><b| for kets of equal length 2 or 4.
  static ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);

  std::size_t dim() const noexcept { return dim_; }

  Complex operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }
  Complex& operator()(std::size_t row, std::size_t col) noexcept {
    return data_[row * dim_ + col];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;

  /// (M + M^dagger) / 2; removes rounding asymmetry from products.
  ComplexMatrix hermitian_part() const;

  Complex trace() const noexcept;
  double frobenius_norm() const noexcept;
  bool is_finite() const noexcept;

  bool is_hermitian(double tol = kDefaultTol) const noexcept;
  bool is_unitary(double tol = kDefaultTol) const;
  bool is_psd(double tol = kDefaultTol) const;
  bool trace_one(double tol = kDefaultTol) const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_;
  std::array<Complex, kMaxDim * kMaxDim> data_{};
};

std::ostream& operator<<(std::ostream& os, const ComplexMatrix& m);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

Ket2 multiply(const ComplexMatrix& m, const Ket2& ket);
Ket4 multiply(const ComplexMatrix& m, const Ket4& ket);

/// Kronecker product a (x) b of two 2x2 matrices; a acts on subsystem A.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced 2x2 matrix on `keep`, tracing out the other qubit.
ComplexMatrix partial_trace(const ComplexMatrix& m, Subsystem keep);

/// Partial transpose of a 4x4 matrix on subsystem `on`.
ComplexMatrix partial_transpose(const ComplexMatrix& m, Subsystem on = Subsystem::A);

struct HermitianEigen {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Eigenvector phases are fixed so that the first component with
/// modulus above 1e-8 is real and positive. Throws DomainError when the input
/// is not Hermitian within `tol`.
HermitianEigen eig_hermitian(const ComplexMatrix& m, double tol = kDefaultTol);

/// Applies f to the spectrum: V diag(f(lambda)) V^dagger.
ComplexMatrix hermitian_function(const HermitianEigen& eig, const std::function<Complex(double)>& f);

/// Principal square root of a PSD matrix. Eigenvalues within `floor` of zero
/// are taken as zero; anything below -floor raises DomainError.
ComplexMatrix sqrt_psd(const ComplexMatrix& m, double floor = kPsdFloor);

/// Sum of |lambda_k| over the spectrum of a Hermitian matrix.
double trace_norm_hermitian(const ComplexMatrix& m, double tol = kDefaultTol);

/// exp(-i H t) for Hermitian H.
ComplexMatrix unitary_evolution(const ComplexMatrix& hamiltonian, double t);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

}  // namespace ptnc
