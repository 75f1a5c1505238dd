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

// Nonclassicality quantifiers for two-qubit states. Entropies are in bits.

#pragma once

#include <array>

#include "ptnc/beamsplitter.hpp"
#include "ptnc/cxmat.hpp"

namespace ptnc {

/// Von Neumann entropy -sum lambda log2 lambda of a density matrix (2x2 or
/// 4x4). Eigenvalues below kPsdFloor count as zero. Throws DomainError for
/// anything that is not a density matrix.
double entropy(const ComplexMatrix& rho);

/// S(rho_A) + S(rho_B) - S(rho).
double mutual_information(const TwoModeState& state);

/// Rank-one projectors onto the eigenvectors of a 2x2 reduced state. When
/// the two eigenvalues coincide within `degeneracy_tol` the computational
/// basis projectors are returned instead.
std::array<ComplexMatrix, 2> spectral_projectors(const ComplexMatrix& reduced,
                                                 double degeneracy_tol = kDefaultTol);

/// Post-measurement state sum_ij (P_i (x) Q_j) rho (P_i (x) Q_j) with P, Q the
/// spectral projectors of the two marginals.
ComplexMatrix local_spectral_measurement(const TwoModeState& state);

/// Measurement-induced disturbance I(rho) - I(Pi(rho)).
double mid(const TwoModeState& state);

/// Descending square roots of the spectrum of sqrt(rho) rho~ sqrt(rho), with
/// rho~ = (sy (x) sy) rho* (sy (x) sy). Eigenvalues of rho below 1e-14 of the
/// largest are treated as zero.
std::array<double, 4> wootters_lambdas(const TwoModeState& state);

/// Wootters concurrence max(0, l1 - l2 - l3 - l4).
double concurrence(const TwoModeState& state);

/// Negativity sum_k (|lambda_k| - lambda_k) / 2 over the partial-transpose
/// spectrum.
double negativity(const TwoModeState& state);

/// Negativity as (||rho^T_A||_1 - 1) / 2.
double negativity_trace_norm(const TwoModeState& state);

struct MeasureReport {
  double mid = 0.0;
  double concurrence = 0.0;
  double negativity = 0.0;
};

MeasureReport measure_all(const TwoModeState& state);

struct Potentials {
  double concurrence = 0.0;  // CP
  double negativity = 0.0;   // NP
};

/// Concurrence and negativity of the beam-splitter output for input q.
Potentials potentials(const QubitState& q);

}  // namespace ptnc
