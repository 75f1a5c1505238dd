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

#include "ptnc/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ptnc/errors.hpp"

namespace ptnc {
namespace {

// Slack on the eta t <= pi/2 bound so grids ending exactly on pi/2 pass.
constexpr double kPdRangeSlack = 1e-12;

// sin(z) / z with its Taylor form near zero.
Complex sinc(Complex z) {
  if (std::abs(z) < 1e-4) {
    const Complex z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("channel time must be finite and non-negative");
}

}  // namespace

std::string_view to_string(ChannelKind kind) noexcept {
  switch (kind) {
    case ChannelKind::None:
      return "none";
    case ChannelKind::RTN:
      return "rtn";
    case ChannelKind::PD:
      return "pd";
    case ChannelKind::AD:
      return "ad";
  }
  return "?";
}

std::optional<ChannelKind> parse_channel_kind(std::string_view text) noexcept {
  if (text == "none") return ChannelKind::None;
  if (text == "rtn") return ChannelKind::RTN;
  if (text == "pd") return ChannelKind::PD;
  if (text == "ad") return ChannelKind::AD;
  return std::nullopt;
}

ChannelSpec ChannelSpec::rtn(double a, double switching_rate) {
  ChannelSpec s;
  s.kind = ChannelKind::RTN;
  s.coupling = a;
  s.switching_rate = switching_rate;
  s.validate();
  return s;
}

ChannelSpec ChannelSpec::pd(double eta) {
  ChannelSpec s;
  s.kind = ChannelKind::PD;
  s.eta = eta;
  s.validate();
  return s;
}

ChannelSpec ChannelSpec::ad(double chi) {
  ChannelSpec s;
  s.kind = ChannelKind::AD;
  s.chi = chi;
  s.validate();
  return s;
}

void ChannelSpec::validate() const {
  for (double rate : {coupling, switching_rate, eta, chi}) {
    if (!std::isfinite(rate) || rate < 0.0) throw DomainError("channel rates must be finite and >= 0");
  }
  if (kind == ChannelKind::RTN && switching_rate <= 0.0) {
    throw DomainError("RTN switching rate must be positive");
  }
}

bool ChannelSpec::is_non_markovian() const noexcept {
  return kind == ChannelKind::RTN && 2.0 * coupling > switching_rate;
}

double rtn_kernel(const ChannelSpec& spec, double t) {
  require_time(t);
  if (spec.kind != ChannelKind::RTN) throw DomainError("rtn_kernel: channel is not RTN");
  spec.validate();
  const double s = spec.switching_rate;
  const double a = spec.coupling;
  // mu s = sqrt(4 a^2 - s^2); sin(mu s t) / mu = s t sinc(mu s t).
  const Complex nu = std::sqrt(Complex((2.0 * a - s) * (2.0 * a + s), 0.0));
  const Complex z = nu * t;
  const Complex value = std::exp(-s * t) * (std::cos(z) + s * t * sinc(z));
  return value.real();
}

double channel_parameter(const ChannelSpec& spec, double t) {
  require_time(t);
  spec.validate();
  switch (spec.kind) {
    case ChannelKind::None:
      return 0.0;
    case ChannelKind::RTN:
      return rtn_kernel(spec, t);
    case ChannelKind::PD: {
      const double angle = spec.eta * t;
      if (angle > std::numbers::pi / 2.0 + kPdRangeSlack) {
        throw DomainError("phase damping is defined for eta t <= pi/2, got " + std::to_string(angle));
      }
      const double c = std::cos(std::min(angle, std::numbers::pi / 2.0));
      return 1.0 - c * c;
    }
    case ChannelKind::AD:
      return -std::expm1(-spec.chi * t);
  }
  return 0.0;
}

double KrausPair::completeness_error() const {
  return max_abs_diff(k0.adjoint() * k0 + k1.adjoint() * k1, ComplexMatrix::identity(2));
}

KrausPair kraus_at(const ChannelSpec& spec, double t) {
  const double q = channel_parameter(spec, t);
  KrausPair k;
  switch (spec.kind) {
    case ChannelKind::None:
      break;
    case ChannelKind::RTN: {
      const double lam = std::clamp(q, -1.0, 1.0);
      k.k0 = ComplexMatrix::identity(2) * std::sqrt((1.0 + lam) / 2.0);
      k.k1 = pauli::z() * std::sqrt((1.0 - lam) / 2.0);
      break;
    }
    case ChannelKind::PD:
      k.k0 = ComplexMatrix::diagonal({1.0, std::sqrt(1.0 - q)});
      k.k1 = ComplexMatrix::diagonal({0.0, std::sqrt(q)});
      break;
    case ChannelKind::AD:
      k.k0 = ComplexMatrix::diagonal({1.0, std::sqrt(1.0 - q)});
      k.k1 = ComplexMatrix(2, {0.0, std::sqrt(q), 0.0, 0.0});
      break;
  }
  return k;
}

ComplexMatrix apply_qubit(const ChannelSpec& spec, double t, const ComplexMatrix& rho) {
  if (rho.dim() != 2) throw DimensionError("apply_qubit: expected a 2x2 density matrix");
  if (!rho.is_hermitian() || !rho.trace_one() || !rho.is_psd()) {
    throw DomainError("apply_qubit: input is not a density matrix");
  }
  const KrausPair k = kraus_at(spec, t);
  return (k.k0 * rho * k.k0.adjoint() + k.k1 * rho * k.k1.adjoint()).hermitian_part();
}

TwoModeState apply_two_arm(const ChannelSpec& spec_a, const ChannelSpec& spec_b, double t_a,
                           double t_b, const TwoModeState& state) {
  const KrausPair ka = kraus_at(spec_a, t_a);
  const KrausPair kb = kraus_at(spec_b, t_b);
  ComplexMatrix out(4);
  for (const ComplexMatrix* a : {&ka.k0, &ka.k1}) {
    for (const ComplexMatrix* b : {&kb.k0, &kb.k1}) {
      const ComplexMatrix k = tensor(*a, *b);
      out += k * state.rho() * k.adjoint();
    }
  }
  return TwoModeState(out.hermitian_part());
}

ComplexMatrix apply_arms_sequential(const ChannelSpec& spec_a, const ChannelSpec& spec_b, double t_a,
                                    double t_b, const ComplexMatrix& rho, bool a_first) {
  const KrausPair ka = kraus_at(spec_a, t_a);
  const KrausPair kb = kraus_at(spec_b, t_b);
  const ComplexMatrix id = ComplexMatrix::identity(2);
  auto arm_a = [&](const ComplexMatrix& m) {
    const ComplexMatrix k0 = tensor(ka.k0, id);
    const ComplexMatrix k1 = tensor(ka.k1, id);
    return k0 * m * k0.adjoint() + k1 * m * k1.adjoint();
  };
  auto arm_b = [&](const ComplexMatrix& m) {
    const ComplexMatrix k0 = tensor(id, kb.k0);
    const ComplexMatrix k1 = tensor(id, kb.k1);
    return k0 * m * k0.adjoint() + k1 * m * k1.adjoint();
  };
  return a_first ? arm_b(arm_a(rho)) : arm_a(arm_b(rho));
}

double concurrence_analytic(const QubitState& q, const ChannelSpec& spec_a, const ChannelSpec& spec_b,
                            double t_a, double t_b) {
  q.validate();
  if (spec_a.kind != spec_b.kind) {
    throw DomainError("concurrence_analytic: both arms must use the same channel kind");
  }
  const double qa = channel_parameter(spec_a, t_a);
  const double qb = channel_parameter(spec_b, t_b);
  switch (spec_a.kind) {
    case ChannelKind::None:
      return q.p;
    case ChannelKind::RTN:
      return q.p * std::abs(qa * qb);
    case ChannelKind::PD:
    case ChannelKind::AD:
      return q.p * std::sqrt((1.0 - qa) * (1.0 - qb));
  }
  return 0.0;
}

double concurrence_rtn_p1(const ChannelSpec& spec_1, const ChannelSpec& spec_2, double t) {
  return rtn_kernel(spec_1, t) * rtn_kernel(spec_2, t);
}

}  // namespace ptnc
