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

// Schmidt decomposition of two-qubit pure states through the 2x2 amplitude
// matrix, and the Bell-diagonal form of a maximally entangled state after
// phase damping on both arms.

#pragma once

#include <array>

#include "ptnc/cxmat.hpp"

namespace ptnc {

/// |w> = a|00> + b|01> + c|10> + d|11>, viewed as M = [[a, b], [c, d]].
struct AmplitudeMatrix {
  Complex a = 1.0;
  Complex b = 0.0;
  Complex c = 0.0;
  Complex d = 0.0;

  static AmplitudeMatrix from_ket(const Ket4& ket) { return {ket[0], ket[1], ket[2], ket[3]}; }
  Ket4 ket() const { return {a, b, c, d}; }

  /// Throws DomainError unless |a|^2 + |b|^2 + |c|^2 + |d|^2 = 1 within tol.
  void validate(double tol = 1e-12) const;
};

struct SingularValues {
  double plus = 0.0;   // sigma_+
  double minus = 0.0;  // sigma_-, with sigma_+ >= sigma_- >= 0
};

/// Closed form sigma_+- = sqrt(1/2 +- sqrt(1/4 - |ad - bc|^2)). The smaller
/// value is evaluated as |ad - bc| / sigma_+ to avoid cancellation.
SingularValues singular_values(const AmplitudeMatrix& m);

/// Singular values from the eigenvectors v_k of M^dag M as ||M v_k||.
SingularValues singular_values_numeric(const AmplitudeMatrix& m);

struct SchmidtForm {
  double alpha = 1.0;  // sigma_+^2, in [1/2, 1]
  SingularValues sigma;
  std::array<Ket2, 2> left;   // |u_0>, |u_1>
  std::array<Ket2, 2> right;  // |v_0>, |v_1>

  /// sigma_+ |u_0>|v_0> + sigma_- |u_1>|v_1>.
  Ket4 reconstruct() const;
};

/// Schmidt form of a normalized two-qubit ket. When the singular values are
/// degenerate the right basis is the computational basis.
SchmidtForm schmidt_decompose(const AmplitudeMatrix& m);

/// Weights l_+- = (1 +- sqrt((1 - lambda1)(1 - lambda2))) / 2.
struct BellWeights {
  double plus = 0.5;
  double minus = 0.5;
};

BellWeights pd_bell_weights(double lambda1, double lambda2);

/// l_+ |b1><b1| + l_- |b2><b2| with |b1,2> = (|01> +- |10>)/sqrt(2): the image
/// of (|01> + |10>)/sqrt(2) under phase damping lambda1 (x) lambda2.
ComplexMatrix pd_bell_diagonal_state(double lambda1, double lambda2);

/// sqrt((1 - lambda1)(1 - lambda2)). Throws DomainError unless both
/// parameters lie in [0, 1].
double pd_bell_diagonal_concurrence(double lambda1, double lambda2);

}  // namespace ptnc
