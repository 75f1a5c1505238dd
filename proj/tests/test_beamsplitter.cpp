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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ptnc/beamsplitter.hpp"
#include "ptnc/errors.hpp"
#include "support/random.hpp"

using namespace ptnc;
using ptnc::testing::Gen;

TEST_CASE("qubit state validation") {
  CHECK_NOTHROW(QubitState{0.5, 0.5}.validate());
  CHECK_THROWS_AS((QubitState{1.2, 0.0}).validate(), DomainError);
  CHECK_THROWS_AS((QubitState{0.5, 0.6}).validate(), DomainError);
  CHECK_THROWS_AS((QubitState{NAN, 0.0}).validate(), DomainError);

  Gen gen(31);
  for (int k = 0; k < 50; ++k) {
    const QubitState q = gen.qubit();
    const QubitState back = QubitState::from_matrix(q.matrix());
    CHECK(back.p == doctest::Approx(q.p));
    CHECK(std::abs(back.x - q.x) < 1e-15);
  }
  CHECK_THROWS_AS(QubitState::from_matrix(pauli::x()), DomainError);
}

TEST_CASE("two-mode state validation") {
  CHECK_THROWS_AS(TwoModeState(ComplexMatrix::identity(4)), DomainError);
  CHECK_THROWS_AS(TwoModeState(ComplexMatrix::diagonal({Complex(1.5), -0.5, 0.0, 0.0})), DomainError);
  CHECK_THROWS_AS(TwoModeState(ComplexMatrix::identity(2)), DimensionError);
}

TEST_CASE("beam-splitter output entries") {
  const ComplexMatrix vacuum = bs_output({0.0, 0.0}).rho();
  CHECK(max_abs_diff(vacuum, ComplexMatrix::diagonal({Complex(1.0), 0.0, 0.0, 0.0})) == 0.0);

  const ComplexMatrix one = bs_output({1.0, 0.0}).rho();
  CHECK(one(1, 1) == Complex(0.5));
  CHECK(one(2, 2) == Complex(0.5));
  CHECK(one(1, 2) == Complex(0.0, -0.5));
  CHECK(one(0, 0) == Complex(0.0));

  const ComplexMatrix half = bs_output({0.5, 0.5}).rho();
  const double s = 1.0 / (2.0 * std::sqrt(2.0));
  CHECK(half(0, 0) == Complex(0.5));
  CHECK(std::abs(half(0, 1) - Complex(0.0, s)) < 1e-16);
  CHECK(std::abs(half(0, 2) - Complex(s)) < 1e-16);
  CHECK(half(1, 1) == Complex(0.25));
  CHECK(half(2, 2) == Complex(0.25));
  for (std::size_t i = 0; i < 4; ++i) CHECK(half(3, i) == Complex(0.0));
}

TEST_CASE("beam-splitter unitary reproduces the output state") {
  const ComplexMatrix u = bs_unitary();
  CHECK(u.is_unitary(1e-14));
  const Ket4 vac{1.0, 0.0, 0.0, 0.0};
  const Ket4 out = multiply(u, vac);
  CHECK(std::abs(out[0] - 1.0) < 1e-15);

  Gen gen(32);
  for (int k = 0; k < 500; ++k) {
    const QubitState q = gen.qubit();
    CHECK(max_abs_diff(conjugate_input(u, q), bs_output(q).rho()) < 1e-12);
  }

  ComplexMatrix broken = u;
  broken(1, 2) += 1e-6;
  CHECK(max_abs_diff(conjugate_input(broken, {0.6, 0.3}), bs_output({0.6, 0.3}).rho()) > 1e-12);
}

TEST_CASE("gates") {
  using namespace gates;
  for (const ComplexMatrix& g : {t(), s(), controlled_s(), swap(), sqrt_swap(), gate_decomposition()}) {
    CHECK(g.is_unitary(1e-12));
  }
  CHECK(max_abs_diff(sqrt_swap() * sqrt_swap(), swap()) < 1e-12);
  CHECK(max_abs_diff(t() * t(), s()) < 1e-15);
}

TEST_CASE("phase-aligned distance") {
  Gen gen(33);
  const ComplexMatrix u = unitary_evolution(gen.hermitian(4), 1.3);
  const PhaseAlignedDistance same = phase_aligned_distance(u * std::polar(1.0, 0.4), u);
  CHECK(same.frobenius < 1e-14);
  CHECK(same.phase == doctest::Approx(0.4));

  // The gate product differs from the beam-splitter unitary beyond a global
  // phase: the one-photon block picks up a factor i and |11> maps to -|11>.
  const PhaseAlignedDistance d = phase_aligned_distance(gate_decomposition(), bs_unitary());
  CHECK(d.frobenius > 0.1);
}
