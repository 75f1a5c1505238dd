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

#include "ptnc/ptqubit.hpp"

#include <cmath>

#include "ptnc/errors.hpp"

namespace ptnc {

double effective_coupling(const ThreeLevelParams& tl, double tol) {
  if (std::abs(tl.delta1 - tl.delta2) > tol) {
    throw DomainError("effective_coupling: detunings must be equal");
  }
  if (std::abs(tl.g - tl.G) > tol) {
    throw DomainError("effective_coupling: optical couplings g and G must be equal");
  }
  if (tl.G == 0.0) throw DomainError("effective_coupling: G must be non-zero");
  return tl.delta1 * tl.omega_rf / (tl.G * tl.G);
}

std::string_view to_string(PhaseLabel label) noexcept {
  switch (label) {
    case PhaseLabel::PTS:
      return "PTS";
    case PhaseLabel::PTSB:
      return "PTSB";
    case PhaseLabel::EXCEPTIONAL:
      return "EXCEPTIONAL";
  }
  return "?";
}

std::optional<PhaseLabel> parse_phase_label(std::string_view text) noexcept {
  if (text == "PTS") return PhaseLabel::PTS;
  if (text == "PTSB") return PhaseLabel::PTSB;
  if (text == "EXCEPTIONAL") return PhaseLabel::EXCEPTIONAL;
  return std::nullopt;
}

Complex PTParams::coupling() const noexcept { return 1.0 - omega_eff * std::polar(1.0, phi); }

double PTParams::j() const noexcept { return std::abs(coupling()); }

Complex PTParams::omega() const noexcept {
  const double jj = j();
  // (J - gamma)(J + gamma) keeps relative accuracy near the exceptional point.
  return std::sqrt(Complex((jj - gamma) * (jj + gamma), 0.0));
}

PhaseLabel PTParams::phase(double tol) const noexcept {
  const double gap = j() - gamma;
  if (gap > tol) return PhaseLabel::PTS;
  if (gap < -tol) return PhaseLabel::PTSB;
  return PhaseLabel::EXCEPTIONAL;
}

ComplexMatrix h_eff(const PTParams& p) {
  const Complex k = p.coupling();
  return ComplexMatrix(2, {Complex(0.0, p.gamma), k, std::conj(k), Complex(0.0, -p.gamma)});
}

EigenPair eigenvalues(const PTParams& p) noexcept {
  const Complex w = p.omega();
  return {w, -w};
}

ComplexMatrix propagator(const PTParams& p, double t, PropagatorBranch branch) {
  if (!(t >= 0.0)) throw DomainError("propagator: time must be non-negative");
  const Complex w = p.omega();
  const Complex wt = w * t;

  const bool series = branch == PropagatorBranch::Series ||
                      (branch == PropagatorBranch::Auto && std::abs(wt) < kSeriesThreshold);
  Complex cos_wt;
  Complex sinc_t;  // sin(wt) / w
  if (series) {
    cos_wt = 1.0 - wt * wt / 2.0;
    sinc_t = t * (1.0 - wt * wt / 6.0);
  } else {
    cos_wt = std::cos(wt);
    sinc_t = std::sin(wt) / w;
  }

  const Complex k = p.coupling();
  return ComplexMatrix(2, {cos_wt + p.gamma * sinc_t, -kI * k * sinc_t,  //
                           -kI * std::conj(k) * sinc_t, cos_wt - p.gamma * sinc_t});
}

ComplexMatrix rho_t(const PTParams& p, double t, const Ket2& initial) {
  const Ket2 psi = multiply(propagator(p, t), initial);
  const double weight = std::norm(psi[0]) + std::norm(psi[1]);
  if (!(weight >= 1e-14) || !std::isfinite(weight)) {
    throw DomainError("rho_t: evolved state has vanishing or non-finite norm");
  }
  ComplexMatrix rho = ComplexMatrix::outer(psi);
  rho *= 1.0 / weight;
  // Diagonal entries are real by construction.
  rho(0, 0) = rho(0, 0).real();
  rho(1, 1) = rho(1, 1).real();
  return rho;
}

}  // namespace ptnc
