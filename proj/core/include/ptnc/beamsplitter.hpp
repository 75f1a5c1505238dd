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

// Balanced beam splitter acting on a single-qubit input and vacuum. Each
// output mode is truncated to {|0>, |1>}; the input lives in the one-photon
// sector and the beam splitter conserves photon number, so nothing is lost.

#pragma once

#include <numbers>

#include "ptnc/cxmat.hpp"

namespace ptnc {

/// Single-qubit state [[1 - p, x], [x*, p]].
struct QubitState {
  double p = 0.0;
  Complex x = 0.0;

  /// Throws DomainError unless 0 <= p <= 1 and |x| <= sqrt(p (1 - p)) (both
  /// up to tol) with finite components.
  void validate(double tol = kDefaultTol) const;

  ComplexMatrix matrix() const;

  /// Reads (p, x) from a 2x2 density matrix; throws if it is not one.
  static QubitState from_matrix(const ComplexMatrix& rho, double tol = kDefaultTol);
};

/// Validated two-mode density matrix in basis {|00>, |01>, |10>, |11>}.
class TwoModeState {
 public:
  /// Throws DomainError unless rho is 4x4, Hermitian, PSD and unit-trace
  /// within tol.
  explicit TwoModeState(ComplexMatrix rho, double tol = kDefaultTol);

  const ComplexMatrix& rho() const noexcept { return rho_; }

 private:
  ComplexMatrix rho_;
};

/// Output of the balanced beam splitter fed with q and vacuum, written out
/// entry by entry.
TwoModeState bs_output(const QubitState& q);

/// Beam-splitter unitary on the truncated two-mode space: exp(-i theta G)
/// with G = (a1^dag a2 + a1 a2^dag) / 2 built from qubit ladder operators,
/// so |11> is left invariant. At theta = pi/2 it maps rho (x) |0><0| onto
/// bs_output(rho).
ComplexMatrix bs_unitary(double theta = std::numbers::pi / 2.0);

/// U (rho (x) |0><0|) U^dagger, returned without state validation.
ComplexMatrix conjugate_input(const ComplexMatrix& unitary, const QubitState& q);

namespace gates {
ComplexMatrix t();
ComplexMatrix s();
ComplexMatrix controlled_s();
ComplexMatrix swap();
ComplexMatrix sqrt_swap();
}  // namespace gates

/// (CS)(T (x) T) sqrt(SWAP).
ComplexMatrix gate_decomposition();

struct PhaseAlignedDistance {
  double frobenius = 0.0;  // min over theta of ||a - e^{i theta} b||_F
  double max_entry = 0.0;  // entrywise max at that theta
  double phase = 0.0;      // theta = arg tr(b^dagger a)
};

/// Distance between two matrices modulo a global phase.
PhaseAlignedDistance phase_aligned_distance(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace ptnc
