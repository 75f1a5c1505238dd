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

#include <benchmark/benchmark.h>

#include <random>

#include "ptnc/channels.hpp"
#include "ptnc/experiment.hpp"
#include "ptnc/measures.hpp"

namespace {

ptnc::ComplexMatrix random_density(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  ptnc::ComplexMatrix g(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = {n(rng), n(rng)};
  }
  ptnc::ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  return rho.hermitian_part();
}

void BM_EigHermitian4(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const ptnc::ComplexMatrix m = random_density(rng);
  for (auto _ : state) benchmark::DoNotOptimize(ptnc::eig_hermitian(m));
}
BENCHMARK(BM_EigHermitian4);

void BM_Concurrence(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const ptnc::TwoModeState s(random_density(rng));
  for (auto _ : state) benchmark::DoNotOptimize(ptnc::concurrence(s));
}
BENCHMARK(BM_Concurrence);

void BM_Mid(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const ptnc::TwoModeState s(random_density(rng));
  for (auto _ : state) benchmark::DoNotOptimize(ptnc::mid(s));
}
BENCHMARK(BM_Mid);

// One row of concurrence-under-noise: rho_t, beam splitter, two noisy arms, C.
void BM_PipelineRow(benchmark::State& state) {
  const ptnc::PTParams p{2.0, 3.141592653589793, 0.5};
  const ptnc::ChannelSpec rtn = ptnc::ChannelSpec::rtn(1.0, 0.2);
  double t = 0.0;
  for (auto _ : state) {
    const auto clean = ptnc::bs_output(ptnc::QubitState::from_matrix(ptnc::rho_t(p, t)));
    benchmark::DoNotOptimize(ptnc::concurrence(ptnc::apply_two_arm(rtn, rtn, t, t, clean)));
    t = t < 10.0 ? t + 0.02 : 0.0;
  }
}
BENCHMARK(BM_PipelineRow);

void BM_MeasuresVsTime(benchmark::State& state) {
  const auto cfg = ptnc::default_config(ptnc::ExperimentId::MeasuresVsTime);
  for (auto _ : state) benchmark::DoNotOptimize(ptnc::run_experiment(cfg));
}
BENCHMARK(BM_MeasuresVsTime)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
