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

#include "ptnc/beamsplitter.hpp"

#include <cmath>
#include <string>

#include "ptnc/errors.hpp"

namespace ptnc {

void QubitState::validate(double tol) const {
  if (!std::isfinite(p) || !std::isfinite(x.real()) || !std::isfinite(x.imag())) {
    throw DomainError("qubit state: components must be finite");
  }
  if (p < -tol || p > 1.0 + tol) {
    throw DomainError("qubit state: p = " + std::to_string(p) + " outside [0, 1]");
  }
  const double bound = std::sqrt(std::max(p * (1.0 - p), 0.0));
  if (std::abs(x) > bound + tol) {
    throw DomainError("qubit state: |x| exceeds sqrt(p (1 - p))");
  }
}

ComplexMatrix QubitState::matrix() const {
  return ComplexMatrix(2, {1.0 - p, x, std::conj(x), p});
}

QubitState QubitState::from_matrix(const ComplexMatrix& rho, double tol) {
  if (rho.dim() != 2) throw DimensionError("qubit state needs a 2x2 matrix");
  if (!rho.is_hermitian(tol) || !rho.trace_one(tol) || !rho.is_psd(tol)) {
    throw DomainError("qubit state: matrix is not a density matrix");
  }
  QubitState q{rho(1, 1).real(), rho(0, 1)};
  q.validate(tol);
  return q;
}

TwoModeState::TwoModeState(ComplexMatrix rho, double tol) : rho_(std::move(rho)) {
  if (rho_.dim() != 4) throw DimensionError("two-mode state needs a 4x4 matrix");
  if (!rho_.is_hermitian(tol)) throw DomainError("two-mode state: matrix is not Hermitian");
  if (!rho_.trace_one(tol)) throw DomainError("two-mode state: trace is not one");
  if (!rho_.is_psd(tol)) throw DomainError("two-mode state: matrix is not positive semidefinite");
}

TwoModeState bs_output(const QubitState& q) {
  q.validate();
  const double p = q.p;
  const Complex x = q.x;
  const Complex xc = std::conj(x);
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix rho(4, {
      1.0 - p,       kI * x * r,       x * r,          0.0,  //
      -kI * xc * r,  p / 2.0,          -kI * p / 2.0,  0.0,  //
      xc * r,        kI * p / 2.0,     p / 2.0,        0.0,  //
      0.0,           0.0,              0.0,            0.0,
  });
  return TwoModeState(std::move(rho));
}

ComplexMatrix bs_unitary(double theta) {
  const ComplexMatrix lower(2, {0.0, 1.0, 0.0, 0.0});  // |0><1|
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const ComplexMatrix a1 = tensor(lower, id);
  const ComplexMatrix a2 = tensor(id, lower);
  ComplexMatrix generator = a1.adjoint() * a2 + a1 * a2.adjoint();
  generator *= 0.5;
  return unitary_evolution(generator, theta);
}

ComplexMatrix conjugate_input(const ComplexMatrix& unitary, const QubitState& q) {
  const ComplexMatrix vacuum = ComplexMatrix::diagonal({1.0, 0.0});
  return unitary * tensor(q.matrix(), vacuum) * unitary.adjoint();
}

namespace gates {

ComplexMatrix t() { return ComplexMatrix::diagonal({1.0, std::polar(1.0, std::numbers::pi / 4.0)}); }

ComplexMatrix s() { return ComplexMatrix::diagonal({1.0, kI}); }

ComplexMatrix controlled_s() { return ComplexMatrix::diagonal({1.0, 1.0, 1.0, kI}); }

ComplexMatrix swap() {
  return ComplexMatrix(4, {1, 0, 0, 0,  //
                           0, 0, 1, 0,  //
                           0, 1, 0, 0,  //
                           0, 0, 0, 1});
}

ComplexMatrix sqrt_swap() {
  const Complex u = Complex(1.0, 1.0) / 2.0;
  const Complex v = Complex(1.0, -1.0) / 2.0;
  return ComplexMatrix(4, {1, 0, 0, 0,  //
                           0, u, v, 0,  //
                           0, v, u, 0,  //
                           0, 0, 0, 1});
}

}  // namespace gates

ComplexMatrix gate_decomposition() {
  return gates::controlled_s() * tensor(gates::t(), gates::t()) * gates::sqrt_swap();
}

PhaseAlignedDistance phase_aligned_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Complex overlap = (b.adjoint() * a).trace();
  const double phase = std::abs(overlap) > 0.0 ? std::arg(overlap) : 0.0;
  const ComplexMatrix diff = a - std::polar(1.0, phase) * b;
  return {diff.frobenius_norm(), max_abs_diff(a, std::polar(1.0, phase) * b), phase};
}

}  // namespace ptnc
