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

#include "ptnc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/SVD>

#include "ptnc/errors.hpp"

namespace ptnc {
namespace {

// Eigenvalues of rho below this fraction of the largest are rounding noise.
constexpr double kRankTol = 1e-14;

double entropy_of_spectrum(const std::vector<double>& values) {
  double s = 0.0;
  for (double v : values) {
    if (v > kPsdFloor) s -= v * std::log2(v);
  }
  return s;
}

}  // namespace

double entropy(const ComplexMatrix& rho) {
  if (!rho.is_hermitian() || !rho.trace_one()) {
    throw DomainError("entropy: argument is not a density matrix");
  }
  const auto eig = eig_hermitian(rho);
  if (eig.values.back() < -kDefaultTol) throw DomainError("entropy: argument is not PSD");
  return std::max(entropy_of_spectrum(eig.values), 0.0);
}

double mutual_information(const TwoModeState& state) {
  const ComplexMatrix& rho = state.rho();
  return entropy(partial_trace(rho, Subsystem::A)) + entropy(partial_trace(rho, Subsystem::B)) -
         entropy(rho);
}

std::array<ComplexMatrix, 2> spectral_projectors(const ComplexMatrix& reduced, double degeneracy_tol) {
  if (reduced.dim() != 2) throw DimensionError("spectral_projectors: expected a 2x2 matrix");
  const auto eig = eig_hermitian(reduced);
  if (eig.values[0] - eig.values[1] <= degeneracy_tol) {
    return {ComplexMatrix::diagonal({1.0, 0.0}), ComplexMatrix::diagonal({0.0, 1.0})};
  }
  std::array<ComplexMatrix, 2> out{ComplexMatrix(2), ComplexMatrix(2)};
  for (std::size_t k = 0; k < 2; ++k) {
    const Ket2 v{eig.vectors(0, k), eig.vectors(1, k)};
    out[k] = ComplexMatrix::outer(v);
  }
  return out;
}

ComplexMatrix local_spectral_measurement(const TwoModeState& state) {
  const ComplexMatrix& rho = state.rho();
  const auto pa = spectral_projectors(partial_trace(rho, Subsystem::A));
  const auto pb = spectral_projectors(partial_trace(rho, Subsystem::B));
  ComplexMatrix out(4);
  for (const auto& a : pa) {
    for (const auto& b : pb) {
      const ComplexMatrix proj = tensor(a, b);
      out += proj * rho * proj;
    }
  }
  return out.hermitian_part();
}

double mid(const TwoModeState& state) {
  const TwoModeState measured(local_spectral_measurement(state));
  return mutual_information(state) - mutual_information(measured);
}

std::array<double, 4> wootters_lambdas(const TwoModeState& state) {
  // lambda_k are the singular values of tau = W^T (sy (x) sy) W with
  // rho = W W^dag. Working with W avoids a second square root, which would
  // turn rounding noise at the 1e-16 level into 1e-8 errors.
  const auto eig = eig_hermitian(state.rho());
  const double cutoff = kRankTol * std::max(eig.values.front(), 0.0);
  Eigen::Matrix4cd w;
  Eigen::Matrix4cd flip;
  const ComplexMatrix yy = tensor(pauli::y(), pauli::y());
  for (std::size_t k = 0; k < 4; ++k) {
    const double mu = eig.values[k];
    const double weight = mu > cutoff ? std::sqrt(mu) : 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      w(i, k) = eig.vectors(i, k) * weight;
      flip(i, k) = yy(i, k);
    }
  }
  const Eigen::Matrix4cd tau = w.transpose() * flip * w;
  const Eigen::Vector4d sv = tau.jacobiSvd().singularValues();
  std::array<double, 4> lambdas{};
  for (std::size_t k = 0; k < 4; ++k) lambdas[k] = sv(static_cast<Eigen::Index>(k));
  return lambdas;
}

double concurrence(const TwoModeState& state) {
  const auto l = wootters_lambdas(state);
  return std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
}

double negativity(const TwoModeState& state) {
  const auto eig = eig_hermitian(partial_transpose(state.rho(), Subsystem::A));
  double n = 0.0;
  for (double v : eig.values) n += (std::abs(v) - v) / 2.0;
  return n;
}

double negativity_trace_norm(const TwoModeState& state) {
  return (trace_norm_hermitian(partial_transpose(state.rho(), Subsystem::A)) - 1.0) / 2.0;
}

MeasureReport measure_all(const TwoModeState& state) {
  return {mid(state), concurrence(state), negativity(state)};
}

Potentials potentials(const QubitState& q) {
  const TwoModeState out = bs_output(q);
  return {concurrence(out), negativity(out)};
}

}  // namespace ptnc
