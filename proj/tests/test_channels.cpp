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
#include "ptnc/channels.hpp"
#include "ptnc/errors.hpp"
#include "ptnc/measures.hpp"
#include "ptnc/schmidt.hpp"
#include "support/random.hpp"

using namespace ptnc;
using ptnc::testing::Gen;

namespace {

// Markovian kernels decrease monotonically from 1, so bisection finds Lambda(t) = target.
double time_for_kernel(const ChannelSpec& spec, double target) {
  double lo = 0.0;
  double hi = 1.0;
  while (rtn_kernel(spec, hi) > target) hi *= 2.0;
  for (int k = 0; k < 200; ++k) {
    const double mid = (lo + hi) / 2.0;
    (rtn_kernel(spec, mid) > target ? lo : hi) = mid;
  }
  return (lo + hi) / 2.0;
}

ChannelSpec random_spec(Gen& gen, ChannelKind kind, double t) {
  switch (kind) {
    case ChannelKind::RTN:
      return ChannelSpec::rtn(gen.uniform(0.05, 3.0), gen.uniform(0.1, 3.0));
    case ChannelKind::PD:
      return ChannelSpec::pd(gen.uniform(0.0, std::numbers::pi / (2.0 * t)));
    case ChannelKind::AD:
      return ChannelSpec::ad(gen.uniform(0.0, 3.0));
    case ChannelKind::None:
      break;
  }
  return ChannelSpec::none();
}

}  // namespace

TEST_CASE("spec validation and parsing") {
  CHECK_THROWS_AS(ChannelSpec::rtn(1.0, 0.0).validate(), DomainError);
  CHECK_THROWS_AS(ChannelSpec::pd(-0.1).validate(), DomainError);
  CHECK_THROWS_AS(ChannelSpec::ad(NAN).validate(), DomainError);
  CHECK(ChannelSpec::rtn(1.0, 0.2).is_non_markovian());
  CHECK_FALSE(ChannelSpec::rtn(0.1, 1.0).is_non_markovian());
  CHECK(parse_channel_kind("pd") == ChannelKind::PD);
  CHECK_FALSE(parse_channel_kind("PD").has_value());
  CHECK(to_string(ChannelKind::RTN) == "rtn");
}

TEST_CASE("RTN kernel") {
  Gen gen(51);
  for (int k = 0; k < 100; ++k) {
    const double s = gen.uniform(0.1, 2.0);
    const bool non_markovian = k % 2 == 0;
    const double ratio = non_markovian ? gen.uniform(1.1, 8.0) : gen.uniform(0.05, 0.95);
    const ChannelSpec spec = ChannelSpec::rtn(ratio * s / 2.0, s);
    CHECK(rtn_kernel(spec, 0.0) == doctest::Approx(1.0));
    double lo = 1.0;
    double hi = 1.0;
    for (int i = 0; i <= 4000; ++i) {
      const double v = rtn_kernel(spec, 20.0 / s * i / 4000.0);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    CHECK(hi <= 1.0 + 1e-15);
    if (non_markovian) {
      CHECK(lo < 0.0);
    } else {
      CHECK(lo > 0.0);
    }
  }
  // the critical point 4 a tau = 1 is finite and continuous
  const ChannelSpec critical = ChannelSpec::rtn(0.5, 1.0);
  CHECK(rtn_kernel(critical, 2.0) == doctest::Approx(std::exp(-2.0) * 3.0));
  CHECK(rtn_kernel(ChannelSpec::rtn(0.5 + 1e-9, 1.0), 2.0) == doctest::Approx(rtn_kernel(critical, 2.0)));
  CHECK_THROWS_AS(rtn_kernel(critical, -1.0), DomainError);
}

TEST_CASE("channel parameters") {
  CHECK(channel_parameter(ChannelSpec::pd(0.3), 1.0) == doctest::Approx(1.0 - std::pow(std::cos(0.3), 2)));
  CHECK(channel_parameter(ChannelSpec::ad(0.3), 2.0) == doctest::Approx(1.0 - std::exp(-0.6)));
  CHECK(channel_parameter(ChannelSpec::none(), 5.0) == 0.0);
  CHECK_THROWS_AS(channel_parameter(ChannelSpec::pd(1.0), 2.0), DomainError);
  CHECK_NOTHROW(channel_parameter(ChannelSpec::pd(1.0), std::numbers::pi / 2.0));
}

TEST_CASE("Kraus operators") {
  Gen gen(52);
  for (ChannelKind kind : {ChannelKind::None, ChannelKind::RTN, ChannelKind::PD, ChannelKind::AD}) {
    const ChannelSpec spec = random_spec(gen, kind, 1.0);
    const KrausPair k0 = kraus_at(spec, 0.0);
    CHECK(max_abs_diff(k0.k0, ComplexMatrix::identity(2)) < 1e-15);
    CHECK(max_abs_diff(k0.k1, ComplexMatrix(2)) < 1e-15);
    for (int i = 0; i < 100; ++i) CHECK(kraus_at(spec, gen.uniform(0.0, 1.0)).completeness_error() < 1e-10);
  }
  const KrausPair full = kraus_at(ChannelSpec::pd(1.0), std::numbers::pi / 2.0);
  CHECK(max_abs_diff(full.k0, ComplexMatrix::diagonal({Complex(1.0), 0.0})) < 1e-15);
}

TEST_CASE("single-qubit channels") {
  Gen gen(53);
  const ComplexMatrix rho = gen.density(2);
  CHECK(max_abs_diff(apply_qubit(ChannelSpec::rtn(1.0, 0.2), 0.0, rho), rho) < 1e-15);
  CHECK(max_abs_diff(apply_qubit(ChannelSpec::ad(100.0), 1.0, rho), ComplexMatrix::diagonal({Complex(1.0), 0.0})) <
        1e-15);

  const ChannelSpec markovian = ChannelSpec::rtn(0.1, 1.0);
  const double t = time_for_kernel(markovian, 0.5);
  CHECK(rtn_kernel(markovian, t) == doctest::Approx(0.5).epsilon(1e-12));
  const QubitState out = QubitState::from_matrix(apply_qubit(markovian, t, QubitState{0.3, 0.2}.matrix()));
  CHECK(out.p == doctest::Approx(0.3));
  CHECK(std::abs(out.x - 0.1) < 1e-12);

  CHECK_THROWS_AS(apply_qubit(ChannelSpec::none(), 0.0, pauli::x()), DomainError);
}

TEST_CASE("two-arm channels") {
  Gen gen(54);
  const TwoModeState input(gen.density(4));
  CHECK(max_abs_diff(apply_two_arm(ChannelSpec::none(), ChannelSpec::none(), 1.0, 2.0, input).rho(), input.rho()) == 0.0);

  const ComplexMatrix decayed = apply_two_arm(ChannelSpec::ad(100.0), ChannelSpec::ad(100.0), 1.0, 1.0, input).rho();
  CHECK(max_abs_diff(decayed, ComplexMatrix::diagonal({Complex(1.0), 0.0, 0.0, 0.0})) < 1e-14);

  // PD (x) PD on the p = 1 output is Bell diagonal with weights (1 +- c) / 2.
  const double l1 = 0.19;
  const double l2 = 0.51;
  const ChannelSpec a = ChannelSpec::pd(std::acos(std::sqrt(1.0 - l1)));
  const ChannelSpec b = ChannelSpec::pd(std::acos(std::sqrt(1.0 - l2)));
  const ComplexMatrix pd = apply_two_arm(a, b, 1.0, 1.0, bs_output({1.0, 0.0})).rho();
  const double c = std::sqrt((1.0 - l1) * (1.0 - l2));
  const auto eig = eig_hermitian(pd);
  CHECK(eig.values[0] == doctest::Approx((1.0 + c) / 2.0));
  CHECK(eig.values[1] == doctest::Approx((1.0 - c) / 2.0));
  CHECK(std::abs(eig.values[2]) < 1e-14);
  // same spectrum as the Bell-diagonal form, up to the local phase of the output
  const ComplexMatrix local = tensor(ComplexMatrix::identity(2), ComplexMatrix::diagonal({Complex(1.0), kI}));
  CHECK(max_abs_diff(local * pd * local.adjoint(), pd_bell_diagonal_state(l1, l2)) < 1e-14);

  for (int k = 0; k < 100; ++k) {
    const double t = gen.uniform(0.0, 3.0);
    const ChannelSpec x = random_spec(gen, ChannelKind::RTN, t);
    const ChannelSpec y = random_spec(gen, ChannelKind::AD, t);
    const ComplexMatrix rho = gen.density(4);
    const ComplexMatrix ab = apply_arms_sequential(x, y, t, t, rho, true);
    CHECK(max_abs_diff(ab, apply_arms_sequential(x, y, t, t, rho, false)) < 1e-14);
    CHECK(max_abs_diff(ab, apply_two_arm(x, y, t, t, TwoModeState(rho)).rho()) < 1e-14);
  }
}

TEST_CASE("analytic concurrence") {
  const ChannelSpec none = ChannelSpec::none();
  CHECK(concurrence_analytic({0.5, 0.0}, none, none, 1.0, 1.0) == doctest::Approx(0.5));

  const ChannelSpec pd = ChannelSpec::pd(std::acos(0.9));  // lambda(1) = 0.19
  CHECK(channel_parameter(pd, 1.0) == doctest::Approx(0.19));
  CHECK(concurrence_analytic({0.8, 0.0}, pd, pd, 1.0, 1.0) == doctest::Approx(0.648));

  const ChannelSpec rtn = ChannelSpec::rtn(1.0, 0.2);
  CHECK(concurrence_analytic({0.3, 0.1}, rtn, rtn, 0.0, 0.0) == doctest::Approx(0.3));
  CHECK_THROWS_AS(concurrence_analytic({0.3, 0.1}, rtn, pd, 1.0, 1.0), DomainError);

  Gen gen(55);
  for (ChannelKind kind : {ChannelKind::RTN, ChannelKind::PD, ChannelKind::AD}) {
    for (int k = 0; k < 100; ++k) {
      const QubitState q = gen.qubit();
      const double t = gen.uniform(0.01, 5.0);
      const ChannelSpec a = random_spec(gen, kind, t);
      const ChannelSpec b = kind == ChannelKind::RTN ? a : random_spec(gen, kind, t);
      const double numeric = concurrence(apply_two_arm(a, b, t, t, bs_output(q)));
      CHECK(std::abs(numeric - concurrence_analytic(q, a, b, t, t)) < 1e-8);
    }
  }
}

TEST_CASE("RTN concurrence at p = 1") {
  const ChannelSpec nm = ChannelSpec::rtn(1.0, 0.2);
  CHECK(concurrence_rtn_p1(nm, nm, 0.0) == doctest::Approx(1.0));
  Gen gen(56);
  for (int k = 0; k < 100; ++k) {
    const double t = gen.uniform(0.0, 20.0);
    const ChannelSpec a = random_spec(gen, ChannelKind::RTN, t);
    const ChannelSpec b = random_spec(gen, ChannelKind::RTN, t);
    CHECK(concurrence_rtn_p1(a, a, t) == doctest::Approx(std::pow(rtn_kernel(a, t), 2)));
    const double product = concurrence_rtn_p1(a, b, t);
    const double numeric = concurrence(apply_two_arm(a, b, t, t, bs_output({1.0, 0.0})));
    if (product >= 0.0) {
      CHECK(std::abs(numeric - product) < 1e-8);
    } else {
      CHECK(std::abs(numeric + product) < 1e-8);
    }
  }
}
