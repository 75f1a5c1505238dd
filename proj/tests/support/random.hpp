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

// Seeded generators for property tests.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "ptnc/beamsplitter.hpp"
#include "ptnc/cxmat.hpp"

namespace ptnc::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Complex gaussian() {
    const double re = normal_(rng_);
    return {re, normal_(rng_)};
  }

  ComplexMatrix matrix(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = gaussian();
    }
    return m;
  }

  ComplexMatrix hermitian(std::size_t dim) { return matrix(dim).hermitian_part(); }

  ComplexMatrix density(std::size_t dim) {
    const ComplexMatrix g = matrix(dim);
    ComplexMatrix rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    return rho.hermitian_part();
  }

  Ket2 ket2() {
    Ket2 k{gaussian(), gaussian()};
    const double n = std::sqrt(std::norm(k[0]) + std::norm(k[1]));
    for (auto& z : k) z /= n;
    return k;
  }

  QubitState qubit() {
    const double p = uniform(0.0, 1.0);
    const double r = uniform(0.0, 1.0) * std::sqrt(p * (1.0 - p));
    return {p, std::polar(r, uniform(0.0, 2.0 * std::numbers::pi))};
  }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_;
};

}  // namespace ptnc::testing
