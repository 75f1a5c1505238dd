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

// Cross-module consistency checks run by `ptnc validate` and the acceptance
// suite.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ptnc/config.hpp"

namespace ptnc {

struct CheckResult {
  std::string id;    // "1", "2", "2b", ...
  std::string name;
  bool passed = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  double seconds = 0.0;
  std::string detail;
  bool informational = false;  // reported, never fails the run
};

struct ValidationOptions {
  std::uint64_t seed = 20260101;

  /// Added to one off-diagonal entry of the beam-splitter unitary before the
  /// conjugation check. Zero for a normal run.
  double bs_fault = 0.0;

  /// measures-vs-time configuration for the PTS/PTSB comparison; the
  /// built-in default when empty.
  std::optional<ExperimentConfig> measures_config;

  /// Noise experiment configurations for the pointwise degradation check;
  /// the built-in defaults when empty.
  std::vector<ExperimentConfig> noise_configs;
};

/// Takes the measures-vs-time configuration and every noise configuration
/// from `configs`; other experiments are ignored.
void use_configs(ValidationOptions& opts, const std::vector<LoadedConfig>& configs);

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  void print(std::ostream& out) const;
};

/// Individual checks. Each one catches its own exceptions and reports them
/// as a failure.
CheckResult check_noiseless_concurrence(const ValidationOptions& opts);
CheckResult check_channel_analytic(const ValidationOptions& opts);
CheckResult check_rtn_independent_arms(const ValidationOptions& opts);
CheckResult check_bs_identity(const ValidationOptions& opts);
CheckResult check_pt_spectrum(const ValidationOptions& opts);
CheckResult check_kraus(const ValidationOptions& opts);
CheckResult check_rtn_regimes(const ValidationOptions& opts);
CheckResult check_pts_enhancement(const ValidationOptions& opts);
CheckResult check_noise_degrades(const ValidationOptions& opts);
CheckResult check_schmidt(const ValidationOptions& opts);
CheckResult check_negativity_forms(const ValidationOptions& opts);
CheckResult report_gate_decomposition();

ValidationReport run_validation(const ValidationOptions& opts = {});

}  // namespace ptnc
