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

// Single-qubit noise channels in Kraus form and their application to the two
// output arms of the beam splitter.
//
//   RTN  random telegraph noise; coherences scale by the memory kernel
//        Lambda(t) = e^{-s t} (cos(mu s t) + sin(mu s t) / mu),
//        mu = sqrt((2a/s)^2 - 1), s the switching rate (s = 1 / (2 tau)).
//   PD   phase damping with lambda(t) = 1 - cos^2(eta t), 0 <= eta t <= pi/2.
//   AD   amplitude damping with gamma(t) = 1 - e^{-chi t}.

#pragma once

#include <optional>
#include <string_view>

#include "ptnc/beamsplitter.hpp"
#include "ptnc/cxmat.hpp"

namespace ptnc {

enum class ChannelKind { None, RTN, PD, AD };

std::string_view to_string(ChannelKind kind) noexcept;
std::optional<ChannelKind> parse_channel_kind(std::string_view text) noexcept;

struct ChannelSpec {
  ChannelKind kind = ChannelKind::None;
  double coupling = 0.0;        // RTN: system-fluctuator coupling a
  double switching_rate = 0.0;  // RTN: s = 1 / (2 tau)
  double eta = 0.0;             // PD rate
  double chi = 0.0;             // AD rate

  static ChannelSpec none() { return {}; }
  static ChannelSpec rtn(double a, double switching_rate);
  static ChannelSpec pd(double eta);
  static ChannelSpec ad(double chi);

  /// Throws DomainError for negative or non-finite rates, or an RTN spec with
  /// zero switching rate.
  void validate() const;

  /// 4 a tau = 2a / s > 1. Only meaningful for RTN.
  bool is_non_markovian() const noexcept;
};

/// Memory kernel Lambda(t). Evaluated through complex mu so both regimes and
/// the critical point 4 a tau = 1 share one expression.
double rtn_kernel(const ChannelSpec& spec, double t);

/// Scalar channel strength at time t: Lambda(t) for RTN, lambda(t) for PD,
/// gamma(t) for AD, 0 for None. Throws DomainError for t < 0 and for PD
/// outside eta t <= pi/2.
double channel_parameter(const ChannelSpec& spec, double t);

struct KrausPair {
  ComplexMatrix k0{ComplexMatrix::identity(2)};
  ComplexMatrix k1{ComplexMatrix(2)};

  /// K0^dag K0 + K1^dag K1 - I, entrywise max.
  double completeness_error() const;
};

KrausPair kraus_at(const ChannelSpec& spec, double t);

/// sum_i K_i rho K_i^dag for a 2x2 density matrix.
ComplexMatrix apply_qubit(const ChannelSpec& spec, double t, const ComplexMatrix& rho);

/// sum_ij (K_i(tA) (x) K_j(tB)) rho (K_i(tA) (x) K_j(tB))^dag.
TwoModeState apply_two_arm(const ChannelSpec& spec_a, const ChannelSpec& spec_b, double t_a,
                           double t_b, const TwoModeState& state);

/// Same as apply_two_arm but applies the arms one after the other (A then B,
/// or B then A). Used to check that the two arms commute.
ComplexMatrix apply_arms_sequential(const ChannelSpec& spec_a, const ChannelSpec& spec_b, double t_a,
                                    double t_b, const ComplexMatrix& rho, bool a_first);

/// Closed-form concurrence of the channel output for input q:
///   none  p
///   RTN   p |Lambda_1 Lambda_2|
///   PD    p sqrt((1 - lambda_1)(1 - lambda_2))
///   AD    p sqrt((1 - gamma_1)(1 - gamma_2))
/// The RTN row reduces to max(0, p Lambda_1 Lambda_2) whenever the kernel
/// product is non-negative (always the case for identical arms). With a
/// negative product the spin-flip spectrum still yields p |Lambda_1 Lambda_2|.
/// Both arms must carry the same kind; throws DomainError otherwise.
double concurrence_analytic(const QubitState& q, const ChannelSpec& spec_a, const ChannelSpec& spec_b,
                            double t_a, double t_b);

/// Concurrence of the p = 1 output under RTN on both arms: the product of the
/// two memory kernels (unclamped).
double concurrence_rtn_p1(const ChannelSpec& spec_1, const ChannelSpec& spec_2, double t);

}  // namespace ptnc
