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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ptnc/config.hpp"
#include "ptnc/ptqubit.hpp"

namespace ptnc {

struct EigenSurfaceRow {
  double omega = 0.0;
  double phi = 0.0;
  double gamma = 0.0;
  EigenPair energies;
  PhaseLabel label = PhaseLabel::PTS;
};

/// One time sample of one series. Only the measures the experiment asks for
/// are filled in.
struct ResultRow {
  double t = 0.0;
  std::string label;
  std::optional<double> q;
  std::optional<double> c;
  std::optional<double> n;
};

/// Eigenvalues over the configured (Omega, gamma) or (Omega, phi) grid,
/// Omega varying slowest.
std::vector<EigenSurfaceRow> run_eigen_surface(const ExperimentConfig& cfg);

/// rho_t -> beam splitter -> (Q, C, N) for every parameter set and time.
/// Rows are grouped by parameter set, in configuration order.
std::vector<ResultRow> run_measures_vs_time(const ExperimentConfig& cfg);

/// Channel experiments. For channel-concurrence-p1 the input is the p = 1
/// output state and the label is the channel name; otherwise the input is
/// rho_t for each parameter set and the label is "<set>/<channel>". Both arms
/// are evaluated at the same time t.
std::vector<ResultRow> run_channel_experiments(const ExperimentConfig& cfg);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// %.17g formatting; negative zero prints as 0.
std::string format_number(double v);

/// Runs any experiment and lays its rows out as CSV cells.
CsvTable run_experiment(const ExperimentConfig& cfg);

void write_csv(const CsvTable& table, std::ostream& out);

}  // namespace ptnc
