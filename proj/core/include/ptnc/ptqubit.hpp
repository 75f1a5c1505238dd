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

// Effective PT-symmetric two-level system obtained from a Lambda-type atom
// with balanced gain and loss on the two lower levels. Units: hbar = 1,
// energies and rates measured in units of the bare coupling.
//
// The two levels are ordered {|1>, |3>}; |1> carries gain (+i gamma) and
// |3> carries loss (-i gamma).

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ptnc/cxmat.hpp"

namespace ptnc {

/// Parameters of the underlying three-level Lambda system.
struct ThreeLevelParams {
  double delta1 = 0.0;    // detuning of level 1
  double delta2 = 0.0;    // detuning of level 3
  double g = 1.0;         // optical Rabi frequency on 1-2
  double G = 1.0;         // optical Rabi frequency on 3-2
  double omega_rf = 0.0;  // RF coupling 1-3
  double phi = 0.0;       // relative phase of the RF field
};

/// Dimensionless coupling Omega = Delta * Omega_rf / G^2. Requires equal
/// detunings and equal optical couplings; throws DomainError otherwise or
/// when G vanishes.
double effective_coupling(const ThreeLevelParams& tl, double tol = 1e-12);

enum class PhaseLabel { PTS, PTSB, EXCEPTIONAL };

std::string_view to_string(PhaseLabel label) noexcept;
std::optional<PhaseLabel> parse_phase_label(std::string_view text) noexcept;

/// Classification tolerance on |J - gamma|.
inline constexpr double kExceptionalTol = 1e-9;

struct PTParams {
  double omega_eff = 0.0;  // dimensionless Omega
  double phi = 0.0;        // radians
  double gamma = 0.0;      // gain/loss rate

  /// Off-diagonal coupling 1 - Omega e^{i phi}.
  Complex coupling() const noexcept;

  /// J = |1 - Omega e^{i phi}|.
  double j() const noexcept;

  /// omega = sqrt(J^2 - gamma^2) on the principal complex branch.
  Complex omega() const noexcept;

  PhaseLabel phase(double tol = kExceptionalTol) const noexcept;
};

/// [[i gamma, 1 - Omega e^{i phi}], [1 - Omega e^{-i phi}, -i gamma]].
ComplexMatrix h_eff(const PTParams& p);

struct EigenPair {
  Complex plus;
  Complex minus;
};

/// E_{+-} = +-omega.
EigenPair eigenvalues(const PTParams& p) noexcept;

/// How propagator() evaluates cos(omega t) and sin(omega t)/omega.
enum class PropagatorBranch {
  Auto,    // Taylor forms when |omega t| < kSeriesThreshold, complex trig otherwise
  Series,  // always the truncated Taylor forms
  Direct,  // always complex trigonometry (undefined at omega == 0)
};

inline constexpr double kSeriesThreshold = 1e-6;

/// Non-unitary propagator exp(-i H_eff t) in closed form:
///   cos(wt) I - i sin(wt)/w H_eff
/// which stays finite through the exceptional point. Throws DomainError for
/// t < 0.
ComplexMatrix propagator(const PTParams& p, double t, PropagatorBranch branch = PropagatorBranch::Auto);

/// Default initial ket |1> = (1, 0).
inline constexpr Ket2 kLevelOne{Complex(1.0), Complex(0.0)};

/// Density matrix of the normalized state U(t)|psi0> / || U(t)|psi0> ||.
/// The result is a pure, unit-trace 2x2 density matrix. Throws DomainError
/// when the unnormalized weight falls below 1e-14.
ComplexMatrix rho_t(const PTParams& p, double t, const Ket2& initial = kLevelOne);

}  // namespace ptnc
