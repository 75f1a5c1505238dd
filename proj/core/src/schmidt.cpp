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

#include "ptnc/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ptnc/errors.hpp"

namespace ptnc {
namespace {

ComplexMatrix as_matrix(const AmplitudeMatrix& m) { return ComplexMatrix(2, {m.a, m.b, m.c, m.d}); }

double norm(const Ket2& k) { return std::sqrt(std::norm(k[0]) + std::norm(k[1])); }

void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) throw DomainError(std::string(name) + " must lie in [0, 1]");
}

}  // namespace

void AmplitudeMatrix::validate(double tol) const {
  const double n = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
  if (!std::isfinite(n) || std::abs(n - 1.0) > tol) {
    throw DomainError("amplitude matrix is not normalized");
  }
}

SingularValues singular_values(const AmplitudeMatrix& m) {
  m.validate();
  const double det = std::abs(m.a * m.d - m.b * m.c);
  const double disc = std::sqrt(std::max(0.25 - det * det, 0.0));
  const double plus = std::sqrt(0.5 + disc);
  return {plus, det / plus};
}

SchmidtForm schmidt_decompose(const AmplitudeMatrix& m) {
  m.validate();
  const ComplexMatrix mat = as_matrix(m);
  const auto eig = eig_hermitian((mat.adjoint() * mat).hermitian_part());

  SchmidtForm out;
  std::array<double, 2> sigma{};
  for (std::size_t k = 0; k < 2; ++k) {
    const Ket2 v{eig.vectors(0, k), eig.vectors(1, k)};
    const Ket2 mv = multiply(mat, v);
    sigma[k] = norm(mv);
    // M = sum_k sigma_k u_k v_k^dag, so the right Schmidt ket is conj(v_k).
    out.right[k] = {std::conj(v[0]), std::conj(v[1])};
    if (sigma[k] > 1e-12) out.left[k] = {mv[0] / sigma[k], mv[1] / sigma[k]};
  }
  if (sigma[1] <= 1e-12) {
    const Ket2& u0 = out.left[0];
    out.left[1] = {-std::conj(u0[1]), std::conj(u0[0])};
  }
  out.sigma = {sigma[0], sigma[1]};
  out.alpha = sigma[0] * sigma[0];
  return out;
}

SingularValues singular_values_numeric(const AmplitudeMatrix& m) { return schmidt_decompose(m).sigma; }

Ket4 SchmidtForm::reconstruct() const {
  Ket4 out{};
  const std::array<double, 2> s{sigma.plus, sigma.minus};
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) out[2 * i + j] += s[k] * left[k][i] * right[k][j];
    }
  }
  return out;
}

BellWeights pd_bell_weights(double lambda1, double lambda2) {
  const double c = pd_bell_diagonal_concurrence(lambda1, lambda2);
  return {(1.0 + c) / 2.0, (1.0 - c) / 2.0};
}

ComplexMatrix pd_bell_diagonal_state(double lambda1, double lambda2) {
  const BellWeights w = pd_bell_weights(lambda1, lambda2);
  const double r = 1.0 / std::sqrt(2.0);
  const Ket4 b1{0.0, r, r, 0.0};
  const Ket4 b2{0.0, r, -r, 0.0};
  return w.plus * ComplexMatrix::outer(b1) + w.minus * ComplexMatrix::outer(b2);
}

double pd_bell_diagonal_concurrence(double lambda1, double lambda2) {
  require_unit_interval(lambda1, "lambda1");
  require_unit_interval(lambda2, "lambda2");
  return std::sqrt((1.0 - lambda1) * (1.0 - lambda2));
}

}  // namespace ptnc
